#ifndef SPANPATH_COORDS_HPP
#define SPANPATH_COORDS_HPP

#include <span>

#include "spanpath/topology.hpp"

namespace spanpath {

enum class Metric { euclidean, manhattan };

// Integer hop-count coordinates: coords[v][i] is the BFS hop distance from
// anchor i to node v. The anchor's own entry in its dimension is 0, and every
// dimension changes by at most 1 across any edge.
struct CoordinateAssignment {
    std::vector<NodeId> anchors;
    std::vector<std::vector<std::int32_t>> coords;

    std::size_t dimensions() const { return anchors.size(); }
};

// Real-valued coordinates after neighborhood averaging.
struct AlignedAssignment {
    std::vector<NodeId> anchors;
    std::vector<std::vector<double>> coords;
};

CoordinateAssignment assign_vcs(const Topology& t, const std::vector<NodeId>& anchors);

enum class AnchorStrategy { corners, random, center, given };

const char* to_string(AnchorStrategy s);
AnchorStrategy parse_anchor_strategy(const std::string& name);

// corners: one node per area corner, nearest first, k <= 4.
// center:  the k nodes nearest the area centroid (k is normally 1).
// random:  k distinct seeded draws.
// given:   pass-through of `given` (k must match).
std::vector<NodeId> select_anchors(const Topology& t, Area area, AnchorStrategy strategy,
                                   std::size_t k, std::uint64_t seed,
                                   const std::vector<NodeId>& given = {});

// One iteration replaces every node's vector with the per-dimension mean over
// its closed neighborhood (the node plus all neighbors), computed
// synchronously from the previous iteration. Zero iterations casts to real.
AlignedAssignment align_coordinates(const CoordinateAssignment& a, const Topology& t,
                                    std::size_t iterations);
AlignedAssignment align_coordinates(const AlignedAssignment& a, const Topology& t,
                                    std::size_t iterations);

double coord_distance(std::span<const double> p, std::span<const double> q, Metric metric);

// Number of distinct coordinate vectors over all nodes.
std::size_t uniqueness_degree(const CoordinateAssignment& a);

// Largest prefix length k of anchor_sequence for which the k-anchor system
// names strictly more distinct vectors than the (k-1)-anchor one (zero
// anchors name exactly one). An estimate relative to the given sequence, not
// a maximum over all anchor placements.
std::size_t estimate_dimension_degradation(const Topology& t,
                                           const std::vector<NodeId>& anchor_sequence);

// Plain-text dumps, one line per node: "id c1 c2 ... ck".
void dump_coordinates(const CoordinateAssignment& a, std::ostream& out);
void dump_coordinates(const AlignedAssignment& a, std::ostream& out);

} // namespace spanpath

#endif
