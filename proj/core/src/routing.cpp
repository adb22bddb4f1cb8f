#include "spanpath/routing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace spanpath {

namespace {

constexpr NodeId kInvalid = std::numeric_limits<NodeId>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_endpoints(std::size_t n, NodeId src, NodeId dst) {
    if (src >= n || dst >= n)
        throw std::invalid_argument("routing: src/dst out of range");
}

void record_hop(RouteResult& r, NodeId next, HopMode mode, double dist) {
    r.path.push_back(next);
    r.modes.push_back(mode);
    r.dist_to_dst.push_back(dist);
}

bool ttl_spent(RouteResult& r, const HopBudget& budget) {
    if (r.hop_count() < budget.ttl)
        return false;
    r.reason = FailureReason::ttl_exceeded;
    return true;
}

// Neighbor strictly closer to the destination than cur_dist, minimizing the
// distance; ties fall to the lowest id because adjacency is ascending and
// only strict improvements replace the incumbent.
template <typename DistFn>
NodeId closest_improving_neighbor(const Topology& t, NodeId cur, double cur_dist,
                                  DistFn dist, double& best_dist) {
    NodeId best = kInvalid;
    best_dist = cur_dist;
    for (NodeId n : t.adjacency[cur]) {
        const double d = dist(n);
        if (d < best_dist) {
            best_dist = d;
            best = n;
        }
    }
    return best;
}

double euclid_int_rows(std::span<const std::int32_t> p, std::span<const std::int32_t> q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = static_cast<double>(p[i] - q[i]);
        acc += d * d;
    }
    return std::sqrt(acc);
}

double manhattan_int_rows(std::span<const std::int32_t> p, std::span<const std::int32_t> q) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        acc += std::abs(static_cast<std::int64_t>(p[i]) - q[i]);
    return static_cast<double>(acc);
}

} // namespace

const char* to_string(HopMode m) {
    switch (m) {
    case HopMode::greedy: return "greedy";
    case HopMode::perimeter: return "perimeter";
    case HopMode::spr_ascend: return "spr-ascend";
    case HopMode::spr_descend: return "spr-descend";
    case HopMode::backtrack: return "backtrack";
    case HopMode::flood_fallback: return "flood-fallback";
    }
    return "?";
}

const char* to_string(FailureReason r) {
    switch (r) {
    case FailureReason::none: return "none";
    case FailureReason::local_minimum: return "local-minimum";
    case FailureReason::loop_detected: return "loop-detected";
    case FailureReason::ttl_exceeded: return "ttl-exceeded";
    case FailureReason::disconnected: return "disconnected";
    }
    return "?";
}

bool RouteResult::greedy_only() const {
    return std::all_of(modes.begin(), modes.end(),
                       [](HopMode m) { return m == HopMode::greedy; });
}

HopBudget default_budget(const Topology& t) {
    return HopBudget{4 * std::max<std::size_t>(t.node_count(), 1)};
}

CoordView geographic_view(const Topology& t) {
    CoordView v;
    v.dims = 2;
    v.values.reserve(2 * t.node_count());
    for (const Position& p : t.positions) {
        v.values.push_back(p.x);
        v.values.push_back(p.y);
    }
    return v;
}

CoordView vcs_view(const CoordinateAssignment& a) {
    CoordView v;
    v.dims = a.dimensions();
    v.values.reserve(v.dims * a.coords.size());
    for (const auto& row : a.coords)
        for (std::int32_t c : row)
            v.values.push_back(static_cast<double>(c));
    return v;
}

CoordView aligned_view(const AlignedAssignment& a) {
    CoordView v;
    v.dims = a.anchors.size();
    v.values.reserve(v.dims * a.coords.size());
    for (const auto& row : a.coords)
        for (double c : row)
            v.values.push_back(c);
    return v;
}

RouteResult greedy_forward(const Topology& t, const CoordView& view, Metric metric,
                           NodeId src, NodeId dst, HopBudget budget) {
    check_endpoints(t.node_count(), src, dst);
    RouteResult r;
    r.path.push_back(src);
    const auto dst_row = view.row(dst);
    NodeId cur = src;
    while (true) {
        if (cur == dst) {
            r.delivered = true;
            return r;
        }
        if (ttl_spent(r, budget))
            return r;
        const double cur_dist = coord_distance(view.row(cur), dst_row, metric);
        double best_dist = kInf;
        const NodeId next = closest_improving_neighbor(
            t, cur, cur_dist, [&](NodeId n) { return coord_distance(view.row(n), dst_row, metric); },
            best_dist);
        if (next == kInvalid) {
            r.reason = FailureReason::local_minimum;
            return r;
        }
        record_hop(r, next, HopMode::greedy, best_dist);
        cur = next;
    }
}

RouteResult sp_route(const Topology& t, const HopMatrix& hops, NodeId src, NodeId dst,
                     HopBudget budget) {
    check_endpoints(t.node_count(), src, dst);
    RouteResult r;
    r.path.push_back(src);
    NodeId cur = src;
    while (true) {
        if (cur == dst) {
            r.delivered = true;
            return r;
        }
        if (!hops.reachable(cur, dst)) {
            r.reason = FailureReason::disconnected;
            return r;
        }
        if (ttl_spent(r, budget))
            return r;
        NodeId next = kInvalid;
        std::int32_t best = std::numeric_limits<std::int32_t>::max();
        for (NodeId n : t.adjacency[cur]) {
            const std::int32_t h = hops(n, dst);
            if (h != kUnreachable && h < best) {
                best = h;
                next = n;
            }
        }
        record_hop(r, next, HopMode::greedy, static_cast<double>(best));
        cur = next;
    }
}

namespace {

double heading(const Position& from, const Position& to) {
    return std::atan2(to.y - from.y, to.x - from.x);
}

// First planar neighbor counterclockwise from the given heading. A neighbor
// exactly on the heading counts as a full turn, so the reversed incoming
// edge is taken only when it is the sole planar edge (dead-end walk-back).
NodeId next_ccw_neighbor(const Topology& t, const PlanarSubgraph& planar, NodeId cur,
                         double from_heading) {
    constexpr double kTau = 6.283185307179586;
    NodeId best = kInvalid;
    double best_diff = kInf;
    for (NodeId n : planar.kept[cur]) {
        double diff = heading(t.positions[cur], t.positions[n]) - from_heading;
        while (diff <= 0.0)
            diff += kTau;
        if (diff < best_diff) {
            best_diff = diff;
            best = n;
        }
    }
    return best;
}

} // namespace

RouteResult gpsr_route(const Topology& t, const PlanarSubgraph& planar, NodeId src,
                       NodeId dst, HopBudget budget) {
    check_endpoints(t.node_count(), src, dst);
    if (planar.kept.size() != t.node_count())
        throw std::invalid_argument("gpsr_route: planar subgraph does not match topology");
    RouteResult r;
    r.path.push_back(src);
    const Position dst_pos = t.positions[dst];

    bool perimeter = false;
    Position entry_pos{};
    double entry_dist = kInf;
    NodeId face_u = kInvalid; // first edge of the current face, for loop detection
    NodeId face_v = kInvalid;
    NodeId prev = kInvalid; // perimeter predecessor; invalid right after entering
    NodeId cur = src;

    while (true) {
        if (cur == dst) {
            r.delivered = true;
            return r;
        }
        if (ttl_spent(r, budget))
            return r;

        if (!perimeter) {
            const double cur_dist = euclidean(t.positions[cur], dst_pos);
            double best_dist = kInf;
            const NodeId next = closest_improving_neighbor(
                t, cur, cur_dist,
                [&](NodeId n) { return euclidean(t.positions[n], dst_pos); }, best_dist);
            if (next != kInvalid) {
                record_hop(r, next, HopMode::greedy, best_dist);
                cur = next;
                continue;
            }
            perimeter = true;
            entry_pos = t.positions[cur];
            entry_dist = cur_dist;
            face_u = cur;
            face_v = kInvalid;
            prev = kInvalid;
        }

        // Perimeter step. Resume greedy at the first node strictly closer to
        // the destination than the point where greedy failed.
        if (euclidean(t.positions[cur], dst_pos) < entry_dist) {
            perimeter = false;
            prev = kInvalid;
            continue;
        }
        if (planar.kept[cur].empty()) {
            r.reason = FailureReason::disconnected;
            return r;
        }
        const double start = prev == kInvalid ? heading(t.positions[cur], dst_pos)
                                              : heading(t.positions[cur], t.positions[prev]);
        NodeId next = next_ccw_neighbor(t, planar, cur, start);
        // Change faces where the candidate edge crosses the entry->dst
        // segment. The edge the packet arrived on never crosses it, so the
        // rotation terminates within one cycle of the planar neighbors.
        std::size_t guard = planar.kept[cur].size() + 1;
        while (segments_properly_cross(entry_pos, dst_pos, t.positions[cur],
                                       t.positions[next])) {
            if (guard-- == 0) {
                r.reason = FailureReason::loop_detected;
                return r;
            }
            face_u = cur;
            face_v = kInvalid;
            next = next_ccw_neighbor(t, planar, cur,
                                     heading(t.positions[cur], t.positions[next]));
        }
        if (face_u == cur && face_v == next) {
            // walked the whole face back to its first edge
            r.reason = FailureReason::loop_detected;
            return r;
        }
        if (face_v == kInvalid)
            face_v = next;
        record_hop(r, next, HopMode::perimeter, euclidean(t.positions[next], dst_pos));
        prev = cur;
        cur = next;
    }
}

namespace {

struct SprStep {
    NodeId next;
    bool descend;
};

// Non-parent neighbor whose interval contains the destination spvc, picking
// the narrowest interval (ties to the lowest spvc); parent when none exists.
SprStep span_step(const SpanLabeling& labels, const Topology& t, NodeId cur,
                  std::int32_t dst_spvc) {
    NodeId best = kInvalid;
    std::int32_t best_width = std::numeric_limits<std::int32_t>::max();
    std::int32_t best_spvc = std::numeric_limits<std::int32_t>::max();
    const NodeId parent = labels.labels[cur].parent;
    for (NodeId n : t.adjacency[cur]) {
        if (n == parent)
            continue;
        if (!labels.interval_contains(n, dst_spvc))
            continue;
        const std::int32_t width = labels.interval_width(n);
        const std::int32_t spvc = labels.labels[n].spvc;
        if (width < best_width || (width == best_width && spvc < best_spvc)) {
            best_width = width;
            best_spvc = spvc;
            best = n;
        }
    }
    if (best != kInvalid)
        return {best, true};
    return {parent, false};
}

// Strict-progress figure: tree depth while the destination lies outside the
// current interval, interval width once inside.
double span_potential(const SpanLabeling& labels, NodeId v, std::int32_t dst_spvc) {
    if (labels.interval_contains(v, dst_spvc))
        return static_cast<double>(labels.interval_width(v));
    return static_cast<double>(labels.depth[v]);
}

void check_labels(const SpanLabeling& labels, const Topology& t) {
    if (labels.node_count() != t.node_count())
        throw std::invalid_argument("span routing: labeling does not match topology");
}

} // namespace

RouteResult spr_route(const SpanLabeling& labels, const Topology& t, NodeId src,
                      NodeId dst, HopBudget budget) {
    check_endpoints(t.node_count(), src, dst);
    check_labels(labels, t);
    RouteResult r;
    r.path.push_back(src);
    const std::int32_t dst_spvc = labels.labels[dst].spvc;
    NodeId cur = src;
    while (true) {
        if (labels.labels[cur].spvc == dst_spvc) {
            r.delivered = true;
            return r;
        }
        if (ttl_spent(r, budget))
            return r;
        const SprStep step = span_step(labels, t, cur, dst_spvc);
        if (!step.descend && step.next == cur) {
            // anchor with no candidate: labeling does not cover dst
            r.reason = FailureReason::disconnected;
            return r;
        }
        record_hop(r, step.next, step.descend ? HopMode::spr_descend : HopMode::spr_ascend,
                   span_potential(labels, step.next, dst_spvc));
        cur = step.next;
    }
}

RouteResult agsp_route(const AlignedAssignment& aligned, const SpanLabeling& labels,
                       const Topology& t, NodeId src, NodeId dst, HopBudget budget,
                       bool reenter_greedy) {
    check_endpoints(t.node_count(), src, dst);
    check_labels(labels, t);
    if (aligned.coords.size() != t.node_count())
        throw std::invalid_argument("agsp_route: aligned assignment does not match topology");
    RouteResult r;
    r.path.push_back(src);
    const std::int32_t dst_spvc = labels.labels[dst].spvc;
    const std::span<const double> dst_row(aligned.coords[dst]);
    const auto dist = [&](NodeId v) {
        return coord_distance(std::span<const double>(aligned.coords[v]), dst_row,
                              Metric::euclidean);
    };

    bool span_phase = false;
    double switch_dist = kInf;
    NodeId cur = src;
    while (true) {
        if (cur == dst) {
            r.delivered = true;
            return r;
        }
        if (ttl_spent(r, budget))
            return r;

        if (!span_phase) {
            const double cur_dist = dist(cur);
            double best_dist = kInf;
            const NodeId next =
                closest_improving_neighbor(t, cur, cur_dist, dist, best_dist);
            if (next != kInvalid) {
                record_hop(r, next, HopMode::greedy, best_dist);
                cur = next;
                continue;
            }
            span_phase = true;
            switch_dist = cur_dist;
        } else if (reenter_greedy) {
            const double cur_dist = dist(cur);
            double best_dist = kInf;
            const NodeId next =
                closest_improving_neighbor(t, cur, cur_dist, dist, best_dist);
            if (next != kInvalid && best_dist < switch_dist) {
                record_hop(r, next, HopMode::greedy, best_dist);
                cur = next;
                span_phase = false;
                continue;
            }
        }

        const SprStep step = span_step(labels, t, cur, dst_spvc);
        if (!step.descend && step.next == cur) {
            r.reason = FailureReason::disconnected;
            return r;
        }
        record_hop(r, step.next, step.descend ? HopMode::spr_descend : HopMode::spr_ascend,
                   span_potential(labels, step.next, dst_spvc));
        cur = step.next;
    }
}

RouteResult lcr_route(const CoordinateAssignment& vcs, const Topology& t, NodeId src,
                      NodeId dst, HopBudget budget) {
    check_endpoints(t.node_count(), src, dst);
    if (vcs.dimensions() != 4)
        throw std::invalid_argument("lcr_route: expects a 4-anchor coordinate system");
    if (vcs.coords.size() != t.node_count())
        throw std::invalid_argument("lcr_route: assignment does not match topology");
    RouteResult r;
    r.path.push_back(src);
    const std::span<const std::int32_t> dst_row(vcs.coords[dst]);
    const auto dist = [&](NodeId v) {
        return euclid_int_rows(vcs.coords[v], dst_row);
    };

    std::vector<bool> visited(t.node_count(), false);
    std::vector<NodeId> stack{src};
    visited[src] = true;
    bool greedy_phase = true;
    while (true) {
        const NodeId cur = stack.back();
        if (cur == dst) {
            r.delivered = true;
            return r;
        }
        if (ttl_spent(r, budget))
            return r;

        if (greedy_phase) {
            const double cur_dist = dist(cur);
            double best_dist = kInf;
            const NodeId next =
                closest_improving_neighbor(t, cur, cur_dist, dist, best_dist);
            if (next != kInvalid) {
                visited[next] = true;
                stack.push_back(next);
                record_hop(r, next, HopMode::greedy, best_dist);
                continue;
            }
            greedy_phase = false;
        }

        // Depth-first phase: closest unvisited neighbor wins, otherwise the
        // packet returns along the edge it arrived on.
        NodeId next = kInvalid;
        double best_dist = kInf;
        for (NodeId n : t.adjacency[cur]) {
            if (visited[n])
                continue;
            const double d = dist(n);
            if (d < best_dist) {
                best_dist = d;
                next = n;
            }
        }
        if (next != kInvalid) {
            visited[next] = true;
            stack.push_back(next);
            record_hop(r, next, HopMode::backtrack, best_dist);
        } else {
            stack.pop_back();
            if (stack.empty()) {
                r.reason = FailureReason::loop_detected;
                return r;
            }
            record_hop(r, stack.back(), HopMode::backtrack, dist(stack.back()));
        }
    }
}

RouteResult bvr_route(const CoordinateAssignment& vcs, const Topology& t, NodeId src,
                      NodeId dst, HopBudget budget) {
    check_endpoints(t.node_count(), src, dst);
    const std::size_t k = vcs.dimensions();
    if (k < 10 || k > 80)
        throw std::invalid_argument("bvr_route: anchor count must be in [10, 80]");
    if (vcs.coords.size() != t.node_count())
        throw std::invalid_argument("bvr_route: assignment does not match topology");
    RouteResult r;
    r.path.push_back(src);
    const std::span<const std::int32_t> dst_row(vcs.coords[dst]);
    const auto dist = [&](NodeId v) {
        return manhattan_int_rows(vcs.coords[v], dst_row);
    };

    // Anchor serving the scoped flood: the one the destination is closest to.
    std::size_t anchor_dim = 0;
    for (std::size_t i = 1; i < k; ++i)
        if (vcs.coords[dst][i] < vcs.coords[dst][anchor_dim])
            anchor_dim = i;
    const NodeId anchor = vcs.anchors[anchor_dim];
    const std::int32_t anchor_radius = vcs.coords[dst][anchor_dim];

    bool fallback = false;
    double fallback_entry = kInf;
    NodeId cur = src;
    while (true) {
        if (cur == dst) {
            r.delivered = true;
            return r;
        }
        if (ttl_spent(r, budget))
            return r;

        const double cur_dist = dist(cur);
        if (!fallback) {
            double best_dist = kInf;
            const NodeId next =
                closest_improving_neighbor(t, cur, cur_dist, dist, best_dist);
            if (next != kInvalid) {
                record_hop(r, next, HopMode::greedy, best_dist);
                cur = next;
                continue;
            }
            fallback = true;
            fallback_entry = cur_dist;
        }

        // Greedy resumes once any neighbor beats the distance at the point
        // where greedy last failed.
        {
            double best_dist = kInf;
            NodeId best = kInvalid;
            for (NodeId n : t.adjacency[cur]) {
                const double d = dist(n);
                if (d < best_dist) {
                    best_dist = d;
                    best = n;
                }
            }
            if (best != kInvalid && best_dist < fallback_entry) {
                record_hop(r, best, HopMode::greedy, best_dist);
                cur = best;
                fallback = false;
                continue;
            }
        }

        if (cur == anchor) {
            // Scoped flood from the anchor: every node within the
            // destination's hop radius transmits once. The recorded path
            // follows the anchor->destination shortest path.
            for (NodeId w = 0; w < t.node_count(); ++w)
                if (vcs.coords[w][anchor_dim] <= anchor_radius)
                    ++r.flood_tx;
            std::vector<NodeId> down_path; // dst back to just below the anchor
            NodeId w = dst;
            while (w != anchor) {
                down_path.push_back(w);
                NodeId up = kInvalid;
                for (NodeId n : t.adjacency[w]) {
                    if (vcs.coords[n][anchor_dim] == vcs.coords[w][anchor_dim] - 1) {
                        up = n;
                        break;
                    }
                }
                if (up == kInvalid) {
                    r.reason = FailureReason::disconnected;
                    return r;
                }
                w = up;
            }
            for (auto it = down_path.rbegin(); it != down_path.rend(); ++it) {
                if (ttl_spent(r, budget))
                    return r;
                record_hop(r, *it, HopMode::flood_fallback, dist(*it));
            }
            cur = dst;
            continue;
        }

        // Drain toward the anchor along its hop-count gradient.
        NodeId toward = kInvalid;
        for (NodeId n : t.adjacency[cur]) {
            if (vcs.coords[n][anchor_dim] == vcs.coords[cur][anchor_dim] - 1) {
                toward = n;
                break;
            }
        }
        if (toward == kInvalid) {
            r.reason = FailureReason::disconnected;
            return r;
        }
        record_hop(r, toward, HopMode::flood_fallback, dist(toward));
        cur = toward;
    }
}

void write_trace(const RouteResult& r, std::ostream& out) {
    char buf[160];
    for (std::size_t i = 0; i < r.hop_count(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu %u %s %.6f\n", i + 1, r.path[i + 1],
                      to_string(r.modes[i]), r.dist_to_dst[i]);
        out << buf;
    }
}

} // namespace spanpath
