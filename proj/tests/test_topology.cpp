#include "doctest.h"

#include <cmath>
#include <sstream>

#include "spanpath/topology.hpp"
#include "test_util.hpp"

using namespace spanpath;
using namespace spanpath::test;

TEST_CASE("uniform generator stays inside the area") {
    const auto pos = generate_uniform(1000, {100.0, 100.0}, 42);
    REQUIRE(pos.size() == 1000);
    for (const auto& p : pos) {
        CHECK(p.x >= 0.0);
        CHECK(p.x <= 100.0);
        CHECK(p.y >= 0.0);
        CHECK(p.y <= 100.0);
    }
}

TEST_CASE("uniform generator is a pure function of the seed") {
    const auto a = generate_uniform(50, {100.0, 100.0}, 7);
    const auto b = generate_uniform(50, {100.0, 100.0}, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x); // bitwise
        CHECK(a[i].y == b[i].y);
    }
    const auto c = generate_uniform(50, {100.0, 100.0}, 8);
    bool all_same = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        all_same = all_same && a[i].x == c[i].x && a[i].y == c[i].y;
    CHECK_FALSE(all_same);
}

TEST_CASE("generators reject zero nodes and degenerate areas") {
    CHECK_THROWS_AS(generate_uniform(0, {100.0, 100.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_c_shape(0, {100.0, 100.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_uniform(10, {0.0, 100.0}, 1), std::invalid_argument);
}

TEST_CASE("c-shape generator avoids the notch") {
    const Area area{100.0, 100.0};
    const auto pos = generate_c_shape(150, area, 11);
    REQUIRE(pos.size() == 150);
    for (const auto& p : pos) {
        CHECK_FALSE(in_c_notch(area, p));
        const bool in_notch = p.x >= 40.0 && p.y > 100.0 / 3.0 && p.y < 200.0 / 3.0;
        CHECK_FALSE(in_notch);
    }
    const auto single = generate_c_shape(1, area, 3);
    CHECK_FALSE(in_c_notch(area, single.front()));
}

TEST_CASE("c-shape sampling is uniform over the kept region") {
    // chi-square on a 10x10 binning of the area; expected counts follow each
    // cell's overlap with the kept region (total kept area = 8000).
    const Area area{100.0, 100.0};
    const std::size_t n = 500;
    const auto pos = generate_c_shape(n, area, 2024);

    const double notch_x0 = 40.0, notch_y0 = 100.0 / 3.0, notch_y1 = 200.0 / 3.0;
    double region_area = area.width * area.height -
                         (area.width - notch_x0) * (notch_y1 - notch_y0);

    double counts[10][10] = {};
    for (const auto& p : pos) {
        const int i = std::min(9, static_cast<int>(p.x / 10.0));
        const int j = std::min(9, static_cast<int>(p.y / 10.0));
        counts[i][j] += 1.0;
    }

    double chi2 = 0.0;
    int dof_cells = 0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double x0 = 10.0 * i, x1 = x0 + 10.0;
            const double y0 = 10.0 * j, y1 = y0 + 10.0;
            const double ox = std::max(0.0, std::min(x1, area.width) - std::max(x0, notch_x0));
            const double oy = std::max(0.0, std::min(y1, notch_y1) - std::max(y0, notch_y0));
            const double kept = (x1 - x0) * (y1 - y0) - ox * oy;
            const double expected = static_cast<double>(n) * kept / region_area;
            if (expected == 0.0) {
                CHECK(counts[i][j] == 0.0);
                continue;
            }
            chi2 += (counts[i][j] - expected) * (counts[i][j] - expected) / expected;
            ++dof_cells;
        }
    }
    CHECK(chi2 < chi2_critical_99(static_cast<double>(dof_cells - 1)));
}

TEST_CASE("unit-disk edges are boundary inclusive") {
    const Topology t = build_topology({{0.0, 0.0}, {5.0, 0.0}}, 5.0);
    REQUIRE(t.adjacency[0].size() == 1);
    CHECK(t.adjacency[0][0] == 1);
    CHECK(t.adjacency[1][0] == 0);

    const Topology lone = build_topology({{3.0, 3.0}}, 5.0);
    CHECK(lone.adjacency[0].empty());

    CHECK_THROWS_AS(build_topology({{0.0, 0.0}}, 0.0), std::invalid_argument);
}

TEST_CASE("3x3 unit grid has exactly the 12 axis edges") {
    const Topology t = make_grid(3);
    CHECK(t.edge_count() == 12);
    // diagonals sit at sqrt(2) > 1
    for (NodeId u = 0; u < 9; ++u)
        for (NodeId v : t.adjacency[u])
            CHECK(euclidean(t.positions[u], t.positions[v]) == doctest::Approx(1.0));
}

TEST_CASE("adjacency matches a brute-force distance scan") {
    const auto pos = generate_uniform(100, {100.0, 100.0}, 5);
    const Topology t = build_topology(pos, 15.0);
    for (NodeId u = 0; u < 100; ++u) {
        std::vector<NodeId> expected;
        for (NodeId v = 0; v < 100; ++v)
            if (v != u && euclidean(pos[u], pos[v]) <= 15.0)
                expected.push_back(v);
        CHECK(t.adjacency[u] == expected);
    }
}

TEST_CASE("adjacency is symmetric and sorted") {
    const Topology t = build_topology(generate_uniform(120, {100.0, 100.0}, 9), 13.0);
    for (NodeId u = 0; u < t.node_count(); ++u) {
        CHECK(std::is_sorted(t.adjacency[u].begin(), t.adjacency[u].end()));
        for (NodeId v : t.adjacency[u]) {
            CHECK(v != u);
            CHECK(std::binary_search(t.adjacency[v].begin(), t.adjacency[v].end(), u));
        }
    }
}

TEST_CASE("connectivity: trivial cases") {
    CHECK(is_connected(build_topology({{1.0, 1.0}}, 2.0)));
    CHECK_FALSE(is_connected(build_topology({{0.0, 0.0}, {10.0, 0.0}}, 5.0)));
}

TEST_CASE("connectivity flips once under a growing range, agreeing with union-find") {
    const auto pos = generate_uniform(100, {100.0, 100.0}, 31);
    bool previous = false;
    for (double range = 2.0; range <= 40.0; range += 1.0) {
        const Topology t = build_topology(pos, range);
        UnionFind uf(t.node_count());
        for (NodeId u = 0; u < t.node_count(); ++u)
            for (NodeId v : t.adjacency[u])
                uf.unite(u, v);
        const bool connected = is_connected(t);
        CHECK(connected == uf.connected());
        if (previous)
            CHECK(connected); // no flip back to disconnected
        previous = connected;
    }
    CHECK(previous); // range 40 on 100x100 must connect
}

TEST_CASE("shortest hops on a chain and a split pair") {
    const Topology chain = make_path(3);
    const HopMatrix m = all_pairs_shortest_hops(chain);
    CHECK(m(0, 2) == 2);
    CHECK(m(2, 0) == 2);
    CHECK(m(1, 1) == 0);

    const Topology split = build_topology({{0.0, 0.0}, {50.0, 0.0}}, 5.0);
    const HopMatrix s = all_pairs_shortest_hops(split);
    CHECK(s(0, 1) == kUnreachable);
    CHECK_FALSE(s.reachable(0, 1));
}

TEST_CASE("shortest hops agree with Floyd-Warshall") {
    const Topology t = build_topology(generate_uniform(50, {100.0, 100.0}, 77), 18.0);
    const HopMatrix m = all_pairs_shortest_hops(t);
    const auto fw = oracle_floyd_warshall(t);
    for (NodeId u = 0; u < 50; ++u)
        for (NodeId v = 0; v < 50; ++v) {
            CHECK(m(u, v) == fw[u][v]);
            CHECK(m(u, v) == m(v, u));
        }
}

TEST_CASE("scenario files round-trip") {
    const Topology t = build_topology(generate_uniform(80, {100.0, 100.0}, 12), 14.5);
    std::stringstream ss;
    save_scenario(t, ss);

    const Topology back = load_scenario(ss);
    REQUIRE(back.node_count() == t.node_count());
    CHECK(back.radio_range == t.radio_range);
    for (NodeId v = 0; v < t.node_count(); ++v) {
        CHECK(std::abs(back.positions[v].x - t.positions[v].x) <= 5e-7);
        CHECK(std::abs(back.positions[v].y - t.positions[v].y) <= 5e-7);
    }
    CHECK(back.adjacency == t.adjacency);

    std::stringstream again;
    save_scenario(back, again);
    std::stringstream orig;
    save_scenario(t, orig);
    CHECK(again.str() == orig.str());
}

TEST_CASE("scenario loader rejects malformed input") {
    std::stringstream bad_header("x y\n");
    CHECK_THROWS_AS(load_scenario(bad_header), std::runtime_error);
    std::stringstream bad_ids("2 5.0\n0 1.0 1.0\n7 2.0 2.0\n");
    CHECK_THROWS_AS(load_scenario(bad_ids), std::runtime_error);
}
