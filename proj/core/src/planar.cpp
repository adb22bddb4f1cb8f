#include "spanpath/planar.hpp"

namespace spanpath {

namespace {

// Witness scan shared by both planarizations. keep(u, v, w) decides whether
// witness w lets edge (u,v) survive; the scan is brute force over all nodes.
template <typename Keep>
PlanarSubgraph planarize(const Topology& t, Keep witness_allows) {
    const std::size_t n = t.node_count();
    PlanarSubgraph g;
    g.kept.assign(n, {});
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : t.adjacency[u]) {
            if (v < u)
                continue; // each undirected edge decided once
            bool keep = true;
            for (NodeId w = 0; w < n && keep; ++w) {
                if (w == u || w == v)
                    continue;
                keep = witness_allows(u, v, w);
            }
            if (keep) {
                g.kept[u].push_back(v);
                g.kept[v].push_back(u);
            }
        }
    }
    return g;
}

} // namespace

PlanarSubgraph gabriel_graph(const Topology& t) {
    return planarize(t, [&](NodeId u, NodeId v, NodeId w) {
        const double uv = squared_distance(t.positions[u], t.positions[v]);
        const double uw = squared_distance(t.positions[u], t.positions[w]);
        const double vw = squared_distance(t.positions[v], t.positions[w]);
        return !(uw + vw < uv);
    });
}

PlanarSubgraph rng_graph(const Topology& t) {
    return planarize(t, [&](NodeId u, NodeId v, NodeId w) {
        const double uv = squared_distance(t.positions[u], t.positions[v]);
        const double uw = squared_distance(t.positions[u], t.positions[w]);
        const double vw = squared_distance(t.positions[v], t.positions[w]);
        return !(uw < uv && vw < uv);
    });
}

namespace {

double cross(const Position& o, const Position& a, const Position& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

} // namespace

bool segments_properly_cross(const Position& a, const Position& b,
                             const Position& c, const Position& d) {
    const double d1 = cross(c, d, a);
    const double d2 = cross(c, d, b);
    const double d3 = cross(a, b, c);
    const double d4 = cross(a, b, d);
    return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
           ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

} // namespace spanpath
