#ifndef SPANPATH_TOPOLOGY_HPP
#define SPANPATH_TOPOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace spanpath {

using NodeId = std::uint32_t;

struct Position {
    double x = 0.0;
    double y = 0.0;
};

struct Area {
    double width = 0.0;
    double height = 0.0;
};

inline double squared_distance(const Position& a, const Position& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double euclidean(const Position& a, const Position& b);

// Immutable unit-disk connectivity for one deployment. Edge (u,v) exists iff
// the Euclidean distance is <= radio_range (closed disk) and u != v.
// Neighbor lists are sorted ascending and symmetric.
struct Topology {
    std::vector<Position> positions;
    double radio_range = 0.0;
    std::vector<std::vector<NodeId>> adjacency;

    std::size_t node_count() const { return positions.size(); }
    std::size_t edge_count() const;
    double mean_degree() const;
};

// Deployment generators. Pure functions of (parameters, seed): the same
// arguments always give the same positions, bit for bit.
std::vector<Position> generate_uniform(std::size_t n, Area area, std::uint64_t seed);

// Uniform over the area minus a rectangular notch covering the right 60% of
// the width and the middle third of the height, sampled by rejection.
std::vector<Position> generate_c_shape(std::size_t n, Area area, std::uint64_t seed);

// True iff p falls in the notch excluded by generate_c_shape.
bool in_c_notch(Area area, const Position& p);

Topology build_topology(std::vector<Position> positions, double radio_range);

bool is_connected(const Topology& t);

// Hop counts from one source; kUnreachable where BFS does not reach.
inline constexpr std::int32_t kUnreachable = -1;
std::vector<std::int32_t> bfs_hops(const Topology& t, NodeId source);

// Dense N x N matrix of minimum hop counts.
class HopMatrix {
public:
    HopMatrix() = default;
    HopMatrix(std::size_t n) : n_(n), hops_(n * n, kUnreachable) {}

    std::int32_t operator()(NodeId u, NodeId v) const { return hops_[u * n_ + v]; }
    std::int32_t& at(NodeId u, NodeId v) { return hops_[u * n_ + v]; }
    bool reachable(NodeId u, NodeId v) const { return (*this)(u, v) != kUnreachable; }
    std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::vector<std::int32_t> hops_;
};

HopMatrix all_pairs_shortest_hops(const Topology& t);

// Scenario file: line 1 "N RANGE", then N lines "id x y" with coordinates at
// six decimal places. The loader rebuilds adjacency from positions + range.
void save_scenario(const Topology& t, std::ostream& out);
void save_scenario(const Topology& t, const std::string& path);
Topology load_scenario(std::istream& in);
Topology load_scenario(const std::string& path);

} // namespace spanpath

#endif
