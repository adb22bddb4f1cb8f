#ifndef SPANPATH_PLANAR_HPP
#define SPANPATH_PLANAR_HPP

#include "spanpath/topology.hpp"

namespace spanpath {

// Crossing-free spanning subgraph used for face routing. kept holds the
// per-node surviving neighbor sublists, sorted ascending and symmetric.
struct PlanarSubgraph {
    std::vector<std::vector<NodeId>> kept;
};

// Keep edge (u,v) iff no third node lies strictly inside the circle with
// diameter uv:  d(u,w)^2 + d(v,w)^2 < d(u,v)^2  eliminates the edge.
PlanarSubgraph gabriel_graph(const Topology& t);

// Keep edge (u,v) iff no third node w has  max(d(u,w), d(v,w)) < d(u,v).
PlanarSubgraph rng_graph(const Topology& t);

// Proper segment crossing: interior intersection only, shared endpoints and
// touching at an endpoint do not count.
bool segments_properly_cross(const Position& a, const Position& b,
                             const Position& c, const Position& d);

} // namespace spanpath

#endif
