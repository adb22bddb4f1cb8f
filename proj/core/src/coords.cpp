#include "spanpath/coords.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>

#include "spanpath/rng.hpp"

namespace spanpath {

namespace {

void validate_anchor_ids(const Topology& t, const std::vector<NodeId>& anchors) {
    if (anchors.empty())
        throw std::invalid_argument("anchors must be non-empty");
    std::set<NodeId> seen;
    for (NodeId a : anchors) {
        if (a >= t.node_count())
            throw std::invalid_argument("anchor id " + std::to_string(a) + " out of range");
        if (!seen.insert(a).second)
            throw std::invalid_argument("duplicate anchor id " + std::to_string(a));
    }
}

} // namespace

CoordinateAssignment assign_vcs(const Topology& t, const std::vector<NodeId>& anchors) {
    validate_anchor_ids(t, anchors);
    const std::size_t n = t.node_count();
    CoordinateAssignment a;
    a.anchors = anchors;
    a.coords.assign(n, std::vector<std::int32_t>(anchors.size(), 0));
    for (std::size_t dim = 0; dim < anchors.size(); ++dim) {
        const auto hops = bfs_hops(t, anchors[dim]);
        for (NodeId v = 0; v < n; ++v) {
            if (hops[v] == kUnreachable)
                throw std::runtime_error("assign_vcs: node " + std::to_string(v) +
                                         " unreachable from anchor " +
                                         std::to_string(anchors[dim]));
            a.coords[v][dim] = hops[v];
        }
    }
    return a;
}

const char* to_string(AnchorStrategy s) {
    switch (s) {
    case AnchorStrategy::corners: return "corners";
    case AnchorStrategy::random: return "random";
    case AnchorStrategy::center: return "center";
    case AnchorStrategy::given: return "given";
    }
    return "?";
}

AnchorStrategy parse_anchor_strategy(const std::string& name) {
    if (name == "corners") return AnchorStrategy::corners;
    if (name == "random") return AnchorStrategy::random;
    if (name == "center") return AnchorStrategy::center;
    if (name == "given") return AnchorStrategy::given;
    throw std::invalid_argument("unknown anchor strategy: " + name);
}

namespace {

// Nearest node to `target` that is not already taken; ties go to the lower id.
NodeId nearest_free_node(const Topology& t, const Position& target,
                         const std::vector<bool>& taken) {
    NodeId best = 0;
    double best_sq = -1.0;
    bool found = false;
    for (NodeId v = 0; v < t.node_count(); ++v) {
        if (taken[v])
            continue;
        const double d = squared_distance(t.positions[v], target);
        if (!found || d < best_sq) {
            best = v;
            best_sq = d;
            found = true;
        }
    }
    if (!found)
        throw std::invalid_argument("select_anchors: not enough free nodes");
    return best;
}

} // namespace

std::vector<NodeId> select_anchors(const Topology& t, Area area, AnchorStrategy strategy,
                                   std::size_t k, std::uint64_t seed,
                                   const std::vector<NodeId>& given) {
    const std::size_t n = t.node_count();
    if (k == 0 || k > n)
        throw std::invalid_argument("select_anchors: k must be in [1, node count]");
    std::vector<NodeId> anchors;
    std::vector<bool> taken(n, false);
    switch (strategy) {
    case AnchorStrategy::corners: {
        if (k > 4)
            throw std::invalid_argument("select_anchors: corners strategy supports k <= 4");
        const Position corners[4] = {{0.0, 0.0},
                                     {area.width, 0.0},
                                     {area.width, area.height},
                                     {0.0, area.height}};
        for (std::size_t i = 0; i < k; ++i) {
            const NodeId v = nearest_free_node(t, corners[i], taken);
            taken[v] = true;
            anchors.push_back(v);
        }
        break;
    }
    case AnchorStrategy::center: {
        const Position centroid{area.width / 2.0, area.height / 2.0};
        for (std::size_t i = 0; i < k; ++i) {
            const NodeId v = nearest_free_node(t, centroid, taken);
            taken[v] = true;
            anchors.push_back(v);
        }
        break;
    }
    case AnchorStrategy::random: {
        std::mt19937_64 eng(seed);
        while (anchors.size() < k) {
            const NodeId v = static_cast<NodeId>(uniform_below(eng, n));
            if (!taken[v]) {
                taken[v] = true;
                anchors.push_back(v);
            }
        }
        break;
    }
    case AnchorStrategy::given: {
        if (given.size() != k)
            throw std::invalid_argument("select_anchors: given list size must equal k");
        validate_anchor_ids(t, given);
        anchors = given;
        break;
    }
    }
    return anchors;
}

namespace {

void run_alignment(std::vector<std::vector<double>>& coords, const Topology& t,
                   std::size_t dims, std::size_t iterations) {
    const std::size_t n = t.node_count();
    std::vector<std::vector<double>> next(n, std::vector<double>(dims, 0.0));
    for (std::size_t it = 0; it < iterations; ++it) {
        for (NodeId v = 0; v < n; ++v) {
            const auto& nbrs = t.adjacency[v];
            for (std::size_t d = 0; d < dims; ++d) {
                double sum = coords[v][d];
                for (NodeId w : nbrs)
                    sum += coords[w][d];
                next[v][d] = sum / static_cast<double>(nbrs.size() + 1);
            }
        }
        std::swap(coords, next);
    }
}

} // namespace

AlignedAssignment align_coordinates(const CoordinateAssignment& a, const Topology& t,
                                    std::size_t iterations) {
    const std::size_t n = t.node_count();
    const std::size_t dims = a.dimensions();
    AlignedAssignment out;
    out.anchors = a.anchors;
    out.coords.assign(n, std::vector<double>(dims, 0.0));
    for (NodeId v = 0; v < n; ++v)
        for (std::size_t d = 0; d < dims; ++d)
            out.coords[v][d] = static_cast<double>(a.coords[v][d]);
    run_alignment(out.coords, t, dims, iterations);
    return out;
}

AlignedAssignment align_coordinates(const AlignedAssignment& a, const Topology& t,
                                    std::size_t iterations) {
    AlignedAssignment out = a;
    run_alignment(out.coords, t, a.anchors.size(), iterations);
    return out;
}

double coord_distance(std::span<const double> p, std::span<const double> q, Metric metric) {
    if (p.size() != q.size())
        throw std::invalid_argument("coord_distance: vector length mismatch");
    double acc = 0.0;
    if (metric == Metric::euclidean) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            const double d = p[i] - q[i];
            acc += d * d;
        }
        return std::sqrt(acc);
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        acc += std::abs(p[i] - q[i]);
    return acc;
}

std::size_t uniqueness_degree(const CoordinateAssignment& a) {
    std::vector<std::vector<std::int32_t>> sorted = a.coords;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(
        std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

namespace {

std::size_t uniqueness_of_prefix(const CoordinateAssignment& full, std::size_t k) {
    if (k == 0)
        return 1; // every node shares the empty vector
    std::vector<std::vector<std::int32_t>> prefix(full.coords.size());
    for (std::size_t v = 0; v < full.coords.size(); ++v)
        prefix[v].assign(full.coords[v].begin(), full.coords[v].begin() + k);
    std::sort(prefix.begin(), prefix.end());
    return static_cast<std::size_t>(
        std::unique(prefix.begin(), prefix.end()) - prefix.begin());
}

} // namespace

std::size_t estimate_dimension_degradation(const Topology& t,
                                           const std::vector<NodeId>& anchor_sequence) {
    const CoordinateAssignment full = assign_vcs(t, anchor_sequence);
    std::size_t result = 0;
    std::size_t previous = 1;
    for (std::size_t k = 1; k <= anchor_sequence.size(); ++k) {
        const std::size_t ud = uniqueness_of_prefix(full, k);
        if (ud > previous)
            result = k;
        previous = ud;
    }
    return result;
}

void dump_coordinates(const CoordinateAssignment& a, std::ostream& out) {
    for (std::size_t v = 0; v < a.coords.size(); ++v) {
        out << v;
        for (std::int32_t c : a.coords[v])
            out << ' ' << c;
        out << '\n';
    }
}

void dump_coordinates(const AlignedAssignment& a, std::ostream& out) {
    char buf[32];
    for (std::size_t v = 0; v < a.coords.size(); ++v) {
        out << v;
        for (double c : a.coords[v]) {
            std::snprintf(buf, sizeof(buf), " %.6f", c);
            out << buf;
        }
        out << '\n';
    }
}

} // namespace spanpath
