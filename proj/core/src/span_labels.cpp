#include "spanpath/span_labels.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

namespace spanpath {

std::int32_t SpanLabeling::tree_depth() const {
    if (depth.empty())
        return 0;
    return *std::max_element(depth.begin(), depth.end());
}

namespace {

void check_anchor(const Topology& t, NodeId anchor) {
    if (anchor >= t.node_count())
        throw std::invalid_argument("span labeling: anchor id out of range");
}

[[noreturn]] void throw_unlabeled(const SpanLabeling& l) {
    std::string ids;
    std::size_t count = 0;
    for (NodeId v = 0; v < l.node_count(); ++v) {
        if (l.labels[v].spvc < 0) {
            ++count;
            if (count <= 8) {
                if (count > 1)
                    ids += ' ';
                ids += std::to_string(v);
            }
        }
    }
    if (count > 8)
        ids += " ... (" + std::to_string(count) + " total)";
    throw std::runtime_error("span labeling: topology disconnected, unlabeled nodes: " + ids);
}

// Preorder numbering over whichever child relation `next_child` yields.
// Frames carry an index into the adjacency list so no call-stack recursion
// is involved. When a node's frame is exhausted, every spvc assigned since
// the node was entered belongs to its subtree, so the running counter gives
// max_range directly.
template <typename NextChild>
void number_preorder(const Topology& t, SpanLabeling& l, NextChild is_child) {
    std::vector<std::pair<NodeId, std::size_t>> stack;
    std::int32_t next = 0;

    l.labels[l.anchor].spvc = next++;
    stack.emplace_back(l.anchor, 0);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& nbrs = t.adjacency[v];
        bool descended = false;
        while (idx < nbrs.size()) {
            const NodeId w = nbrs[idx++];
            if (l.labels[w].spvc < 0 && is_child(v, w)) {
                l.labels[w].spvc = next++;
                stack.emplace_back(w, 0);
                descended = true;
                break;
            }
        }
        if (!descended) {
            l.labels[v].max_range = next - 1;
            stack.pop_back();
        }
    }
}

void fill_depths(SpanLabeling& l) {
    // Parents always carry smaller spvc values, so one pass in ascending
    // spvc order resolves all depths.
    const std::size_t n = l.node_count();
    std::vector<NodeId> by_spvc(n);
    for (NodeId v = 0; v < n; ++v)
        by_spvc[static_cast<std::size_t>(l.labels[v].spvc)] = v;
    l.depth.assign(n, 0);
    for (std::size_t s = 1; s < n; ++s) {
        const NodeId v = by_spvc[s];
        l.depth[v] = l.depth[l.labels[v].parent] + 1;
    }
}

} // namespace

SpanLabeling setup_spvcs(const Topology& t, NodeId anchor) {
    check_anchor(t, anchor);
    SpanLabeling l;
    l.anchor = anchor;
    l.variant = LabelVariant::dfs;
    l.labels.assign(t.node_count(), SpanLabel{});
    l.labels[anchor].parent = anchor;

    number_preorder(t, l, [&](NodeId v, NodeId w) {
        l.labels[w].parent = v;
        return true; // every unvisited neighbor becomes a child
    });

    for (NodeId v = 0; v < t.node_count(); ++v)
        if (l.labels[v].spvc < 0)
            throw_unlabeled(l);
    fill_depths(l);
    return l;
}

SpanLabeling setup_ospvcs(const Topology& t, NodeId anchor) {
    check_anchor(t, anchor);
    const std::size_t n = t.node_count();
    SpanLabeling l;
    l.anchor = anchor;
    l.variant = LabelVariant::bfs_optimized;
    l.labels.assign(n, SpanLabel{});

    // Phase 1: breadth-first parent assignment.
    std::vector<bool> visited(n, false);
    std::queue<NodeId> queue;
    l.labels[anchor].parent = anchor;
    visited[anchor] = true;
    queue.push(anchor);
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop();
        for (NodeId w : t.adjacency[v]) {
            if (!visited[w]) {
                visited[w] = true;
                l.labels[w].parent = v;
                queue.push(w);
            }
        }
    }

    // Phase 2: preorder numbering over tree edges only.
    number_preorder(t, l, [&](NodeId v, NodeId w) {
        return l.labels[w].parent == v && w != anchor;
    });

    for (NodeId v = 0; v < n; ++v)
        if (l.labels[v].spvc < 0)
            throw_unlabeled(l);
    fill_depths(l);
    return l;
}

void dump_labels(const SpanLabeling& l, std::ostream& out) {
    for (NodeId v = 0; v < l.node_count(); ++v)
        out << v << ' ' << l.labels[v].spvc << ' ' << l.labels[v].max_range << ' '
            << l.labels[v].parent << '\n';
}

} // namespace spanpath
