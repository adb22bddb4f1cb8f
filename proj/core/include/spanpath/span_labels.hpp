#ifndef SPANPATH_SPAN_LABELS_HPP
#define SPANPATH_SPAN_LABELS_HPP

#include "spanpath/topology.hpp"

namespace spanpath {

// Preorder interval label of one node. Over all nodes the spvc values are a
// permutation of 0..N-1, and [spvc, max_range] is exactly the set of spvc
// values in the node's subtree, so max_range = spvc + subtree_size - 1.
struct SpanLabel {
    std::int32_t spvc = -1;
    std::int32_t max_range = -1;
    NodeId parent = 0; // root's parent is itself
};

enum class LabelVariant { dfs, bfs_optimized };

struct SpanLabeling {
    NodeId anchor = 0;
    LabelVariant variant = LabelVariant::dfs;
    std::vector<SpanLabel> labels;
    std::vector<std::int32_t> depth; // hops to the anchor along parent edges

    std::size_t node_count() const { return labels.size(); }
    std::int32_t tree_depth() const;
    bool interval_contains(NodeId v, std::int32_t spvc) const {
        return labels[v].spvc <= spvc && spvc <= labels[v].max_range;
    }
    std::int32_t interval_width(NodeId v) const {
        return labels[v].max_range - labels[v].spvc;
    }
};

// Depth-first preorder numbering from the anchor. Neighbors are explored in
// ascending node id; the first-visited child receives the parent's current
// subtree maximum plus one. Uses an explicit stack: a path graph recurses as
// deep as the node count.
SpanLabeling setup_spvcs(const Topology& t, NodeId anchor);

// Two-phase variant: a breadth-first pass fixes every node's parent (FIFO
// queue, neighbors enqueued in ascending id), then the preorder numbering
// runs restricted to tree edges. The tree depth equals the anchor's BFS
// eccentricity, which keeps the tree shallow.
SpanLabeling setup_ospvcs(const Topology& t, NodeId anchor);

// Plain-text dump, one line per node: "id spvc max_range parent".
void dump_labels(const SpanLabeling& l, std::ostream& out);

} // namespace spanpath

#endif
