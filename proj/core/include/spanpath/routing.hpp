#ifndef SPANPATH_ROUTING_HPP
#define SPANPATH_ROUTING_HPP

#include <span>

#include "spanpath/coords.hpp"
#include "spanpath/planar.hpp"
#include "spanpath/span_labels.hpp"
#include "spanpath/topology.hpp"

namespace spanpath {

enum class HopMode {
    greedy,
    perimeter,
    spr_ascend,
    spr_descend,
    backtrack,
    flood_fallback,
};

enum class FailureReason {
    none,
    local_minimum,
    loop_detected,
    ttl_exceeded,
    disconnected,
};

const char* to_string(HopMode m);
const char* to_string(FailureReason r);

// Outcome of one routing attempt. path starts at the source; modes and
// dist_to_dst have one entry per hop (path.size() - 1). dist_to_dst records
// the forwarding figure of merit after the hop: coordinate distance for
// greedy-style hops, the routing potential for span hops.
struct RouteResult {
    std::vector<NodeId> path;
    std::vector<HopMode> modes;
    bool delivered = false;
    FailureReason reason = FailureReason::none;
    std::vector<double> dist_to_dst;
    std::uint64_t flood_tx = 0; // scoped-flood transmissions (bvr only)

    std::size_t hop_count() const { return path.empty() ? 0 : path.size() - 1; }
    bool greedy_only() const;
};

// Hard per-packet hop cap. Guards against protocol bugs; callers default it
// to 4x the node count.
struct HopBudget {
    std::size_t ttl = 0;
};

HopBudget default_budget(const Topology& t);

// Row-major coordinate matrix: geographic positions, integer hop vectors
// cast to real, or aligned vectors — one uniform view for greedy forwarding.
struct CoordView {
    std::size_t dims = 0;
    std::vector<double> values;

    std::span<const double> row(NodeId v) const {
        return {values.data() + v * dims, dims};
    }
};

CoordView geographic_view(const Topology& t);
CoordView vcs_view(const CoordinateAssignment& a);
CoordView aligned_view(const AlignedAssignment& a);

// Forward to the neighbor strictly closest to the destination under metric;
// ties break to the lowest node id. Fails with local-minimum when no
// neighbor improves on the current node (including the coordinate-collision
// case where the current vector equals the destination's).
RouteResult greedy_forward(const Topology& t, const CoordView& view, Metric metric,
                           NodeId src, NodeId dst, HopBudget budget);

// Hop-count oracle routing: forward to the neighbor with the smallest
// shortest-hop distance to the destination. Optimal by construction.
RouteResult sp_route(const Topology& t, const HopMatrix& hops, NodeId src, NodeId dst,
                     HopBudget budget);

// Greedy on geographic positions with right-hand-rule face recovery on the
// planar subgraph. Perimeter mode starts where greedy fails and ends at the
// first node strictly closer to the destination than that entry point.
RouteResult gpsr_route(const Topology& t, const PlanarSubgraph& planar, NodeId src,
                       NodeId dst, HopBudget budget);

// Interval routing on span labels. A forwarding candidate is any non-parent
// neighbor whose [spvc, max_range] contains the destination spvc; the
// narrowest candidate interval wins (ties to the lowest spvc), otherwise the
// packet climbs to the parent. Delivery is guaranteed on connected graphs.
RouteResult spr_route(const SpanLabeling& labels, const Topology& t, NodeId src,
                      NodeId dst, HopBudget budget);

// Greedy forwarding on aligned coordinates with a switch to span routing at
// the first anomaly. With reenter_greedy the span phase hands back to greedy
// as soon as some neighbor beats the aligned distance at the switch point.
RouteResult agsp_route(const AlignedAssignment& aligned, const SpanLabeling& labels,
                       const Topology& t, NodeId src, NodeId dst, HopBudget budget,
                       bool reenter_greedy = false);

// Greedy on a 4-anchor integer system; at a local minimum the packet walks a
// depth-first search carrying its visited set, popping back along the way it
// came when stuck.
RouteResult lcr_route(const CoordinateAssignment& vcs, const Topology& t, NodeId src,
                      NodeId dst, HopBudget budget);

// Greedy under Manhattan distance on a many-anchor system. At a local
// minimum the packet drains toward the anchor nearest the destination and,
// failing greedy resumption, the anchor floods: the recorded delivery path
// continues along the anchor-to-destination shortest path while flood_tx
// charges one transmission per node inside the scoped-flood radius.
RouteResult bvr_route(const CoordinateAssignment& vcs, const Topology& t, NodeId src,
                      NodeId dst, HopBudget budget);

// Debug trace: one line per hop, "seq node mode dist_to_dst".
void write_trace(const RouteResult& r, std::ostream& out);

} // namespace spanpath

#endif
