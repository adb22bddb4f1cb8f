#include "doctest.h"

#include "spanpath/planar.hpp"
#include "test_util.hpp"

using namespace spanpath;
using namespace spanpath::test;

namespace {

std::vector<std::pair<NodeId, NodeId>> edge_list(const std::vector<std::vector<NodeId>>& adj) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < adj.size(); ++u)
        for (NodeId v : adj[u])
            if (u < v)
                edges.emplace_back(u, v);
    return edges;
}

bool kept_connected(const PlanarSubgraph& g) {
    if (g.kept.empty())
        return true;
    const auto hops = oracle_bfs(g.kept, 0);
    return std::none_of(hops.begin(), hops.end(), [](int h) { return h < 0; });
}

} // namespace

TEST_CASE("a lone edge survives both planarizations") {
    const Topology t = build_topology({{0.0, 0.0}, {1.0, 0.0}}, 1.5);
    CHECK(gabriel_graph(t).kept[0] == std::vector<NodeId>{1});
    CHECK(rng_graph(t).kept[0] == std::vector<NodeId>{1});
}

TEST_CASE("equilateral triangle keeps all gabriel edges") {
    // no vertex falls inside the circle over any opposite side
    const Topology t = build_topology({{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8660254037844386}}, 1.1);
    const PlanarSubgraph gg = gabriel_graph(t);
    CHECK(edge_list(gg.kept).size() == 3);
}

TEST_CASE("planarizations nest: rng within gabriel within the full graph") {
    const Topology t = build_topology(generate_uniform(100, {100.0, 100.0}, 21), 16.0);
    const PlanarSubgraph gg = gabriel_graph(t);
    const PlanarSubgraph rng = rng_graph(t);
    for (NodeId u = 0; u < t.node_count(); ++u) {
        for (NodeId v : rng.kept[u])
            CHECK(std::binary_search(gg.kept[u].begin(), gg.kept[u].end(), v));
        for (NodeId v : gg.kept[u])
            CHECK(std::binary_search(t.adjacency[u].begin(), t.adjacency[u].end(), v));
    }
}

TEST_CASE("kept edges match the witness definitions exactly") {
    const auto pos = generate_uniform(80, {100.0, 100.0}, 33);
    const Topology t = build_topology(pos, 17.0);
    const PlanarSubgraph gg = gabriel_graph(t);
    const PlanarSubgraph rng = rng_graph(t);
    for (NodeId u = 0; u < t.node_count(); ++u) {
        for (NodeId v : t.adjacency[u]) {
            if (v < u)
                continue;
            bool gg_witness = false, rng_witness = false;
            const double uv = squared_distance(pos[u], pos[v]);
            for (NodeId w = 0; w < t.node_count(); ++w) {
                if (w == u || w == v)
                    continue;
                const double uw = squared_distance(pos[u], pos[w]);
                const double vw = squared_distance(pos[v], pos[w]);
                gg_witness = gg_witness || uw + vw < uv;
                rng_witness = rng_witness || (uw < uv && vw < uv);
            }
            const bool in_gg = std::binary_search(gg.kept[u].begin(), gg.kept[u].end(), v);
            const bool in_rng = std::binary_search(rng.kept[u].begin(), rng.kept[u].end(), v);
            CHECK(in_gg == !gg_witness);
            CHECK(in_rng == !rng_witness);
        }
    }
}

TEST_CASE("planar subgraphs preserve connectivity and are symmetric") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        const Topology t = random_connected_topology(100, 9.0, seed);
        for (const PlanarSubgraph& g : {gabriel_graph(t), rng_graph(t)}) {
            CHECK(kept_connected(g));
            for (NodeId u = 0; u < t.node_count(); ++u)
                for (NodeId v : g.kept[u])
                    CHECK(std::binary_search(g.kept[v].begin(), g.kept[v].end(), u));
        }
    }
}

TEST_CASE("no two kept edges properly cross") {
    const Topology t = random_connected_topology(100, 10.0, 99);
    for (const PlanarSubgraph& g : {gabriel_graph(t), rng_graph(t)}) {
        const auto edges = edge_list(g.kept);
        for (std::size_t a = 0; a < edges.size(); ++a) {
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                const auto [u1, v1] = edges[a];
                const auto [u2, v2] = edges[b];
                if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                    continue; // shared endpoint
                CHECK_FALSE(segments_properly_cross(t.positions[u1], t.positions[v1],
                                                    t.positions[u2], t.positions[v2]));
            }
        }
    }
}

TEST_CASE("proper crossing predicate excludes endpoint contact") {
    const Position a{0, 0}, b{2, 2}, c{0, 2}, d{2, 0};
    CHECK(segments_properly_cross(a, b, c, d));
    CHECK_FALSE(segments_properly_cross(a, b, b, d));             // shared endpoint
    CHECK_FALSE(segments_properly_cross(a, b, Position{1, 1}, d)); // touches interior at c
    CHECK_FALSE(segments_properly_cross(a, Position{1, 0}, Position{0, 1}, Position{1, 1}));
}
