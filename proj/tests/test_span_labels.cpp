#include "doctest.h"

#include <set>
#include <sstream>

#include "spanpath/span_labels.hpp"
#include "test_util.hpp"

using namespace spanpath;
using namespace spanpath::test;

namespace {

// Subtree sizes from the parent relation alone, without touching max_range:
// children carry larger spvc values, so one descending pass accumulates.
std::vector<std::size_t> oracle_subtree_sizes(const SpanLabeling& l) {
    const std::size_t n = l.node_count();
    std::vector<NodeId> by_spvc(n);
    for (NodeId v = 0; v < n; ++v)
        by_spvc[static_cast<std::size_t>(l.labels[v].spvc)] = v;
    std::vector<std::size_t> size(n, 1);
    for (std::size_t s = n; s-- > 1;) {
        const NodeId v = by_spvc[s];
        size[l.labels[v].parent] += size[v];
    }
    return size;
}

void check_labeling_invariants(const SpanLabeling& l, const Topology& t) {
    const std::size_t n = l.node_count();
    REQUIRE(n == t.node_count());

    // spvc values form exactly {0..n-1}, anchor gets 0
    std::set<std::int32_t> spvcs;
    for (NodeId v = 0; v < n; ++v)
        spvcs.insert(l.labels[v].spvc);
    CHECK(spvcs.size() == n);
    CHECK(*spvcs.begin() == 0);
    CHECK(*spvcs.rbegin() == static_cast<std::int32_t>(n) - 1);
    CHECK(l.labels[l.anchor].spvc == 0);
    CHECK(l.labels[l.anchor].parent == l.anchor);

    // interval = contiguous block of the subtree, so max_range = spvc+size-1
    const auto sizes = oracle_subtree_sizes(l);
    for (NodeId v = 0; v < n; ++v)
        CHECK(l.labels[v].max_range ==
              l.labels[v].spvc + static_cast<std::int32_t>(sizes[v]) - 1);

    // anchor covers everything; every node sits inside its parent's interval
    CHECK(l.labels[l.anchor].max_range == static_cast<std::int32_t>(n) - 1);
    for (NodeId v = 0; v < n; ++v) {
        if (v == l.anchor)
            continue;
        const NodeId p = l.labels[v].parent;
        CHECK(l.interval_contains(p, l.labels[v].spvc));
        CHECK(std::binary_search(t.adjacency[v].begin(), t.adjacency[v].end(), p));
        CHECK(l.depth[v] == l.depth[p] + 1);
    }

    // intervals are laminar: disjoint or strictly nested
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            const auto& a = l.labels[u];
            const auto& b = l.labels[v];
            const bool disjoint = a.max_range < b.spvc || b.max_range < a.spvc;
            const bool a_in_b = b.spvc <= a.spvc && a.max_range <= b.max_range;
            const bool b_in_a = a.spvc <= b.spvc && b.max_range <= a.max_range;
            CHECK((disjoint || a_in_b || b_in_a));
        }
    }
}

} // namespace

TEST_CASE("chain labeling, both variants") {
    const Topology t = make_path(3);
    for (const SpanLabeling& l : {setup_spvcs(t, 0), setup_ospvcs(t, 0)}) {
        CHECK(l.labels[0].spvc == 0);
        CHECK(l.labels[0].max_range == 2);
        CHECK(l.labels[1].spvc == 1);
        CHECK(l.labels[1].max_range == 2);
        CHECK(l.labels[2].spvc == 2);
        CHECK(l.labels[2].max_range == 2);
        CHECK(l.labels[1].parent == 0);
        CHECK(l.labels[2].parent == 1);
    }
}

TEST_CASE("star labeling from the hub") {
    const Topology t = make_star(3);
    const SpanLabeling l = setup_spvcs(t, 0);
    CHECK(l.labels[0].spvc == 0);
    CHECK(l.labels[0].max_range == 3);
    for (NodeId leaf = 1; leaf <= 3; ++leaf) {
        CHECK(l.labels[leaf].spvc == static_cast<std::int32_t>(leaf));
        CHECK(l.labels[leaf].max_range == static_cast<std::int32_t>(leaf));
        CHECK(l.labels[leaf].parent == 0);
    }
}

TEST_CASE("16-node fixture carries the expected intervals") {
    const Topology t = fixture16();
    const SpanLabeling l = setup_spvcs(t, 0);
    for (NodeId v = 0; v < 16; ++v)
        CHECK(l.labels[v].spvc == static_cast<std::int32_t>(v)); // preorder == id
    CHECK(l.labels[0].max_range == 15);
    CHECK(l.labels[4].max_range == 15);
    CHECK(l.labels[6].max_range == 15);
    CHECK(l.labels[8].max_range == 12);
    CHECK(l.labels[13].max_range == 15);
    check_labeling_invariants(l, t);
}

TEST_CASE("interval invariants hold on random graphs, both variants") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const std::size_t n = 5 + (mix64(seed) % 120);
        const Topology t = random_connected_topology(n, 9.0, 500 + seed);
        const NodeId anchor = static_cast<NodeId>(mix64(seed + 31) % n);
        check_labeling_invariants(setup_spvcs(t, anchor), t);
        check_labeling_invariants(setup_ospvcs(t, anchor), t);
    }
}

TEST_CASE("labelings are deterministic") {
    const Topology t = random_connected_topology(80, 9.0, 321);
    const SpanLabeling a = setup_spvcs(t, 5);
    const SpanLabeling b = setup_spvcs(t, 5);
    for (NodeId v = 0; v < t.node_count(); ++v) {
        CHECK(a.labels[v].spvc == b.labels[v].spvc);
        CHECK(a.labels[v].max_range == b.labels[v].max_range);
        CHECK(a.labels[v].parent == b.labels[v].parent);
    }
}

TEST_CASE("bfs-variant on a chain matches the dfs variant") {
    const Topology t = make_path(6);
    const SpanLabeling dfs = setup_spvcs(t, 0);
    const SpanLabeling bfs = setup_ospvcs(t, 0);
    for (NodeId v = 0; v < 6; ++v) {
        CHECK(dfs.labels[v].spvc == bfs.labels[v].spvc);
        CHECK(dfs.labels[v].max_range == bfs.labels[v].max_range);
        CHECK(dfs.labels[v].parent == bfs.labels[v].parent);
    }
}

TEST_CASE("four-cycle: bfs tree is depth 2, dfs tree depth 3") {
    const Topology t = make_square();
    CHECK(setup_ospvcs(t, 0).tree_depth() == 2);
    CHECK(setup_spvcs(t, 0).tree_depth() == 3);
}

TEST_CASE("bfs-variant tree is never deeper than the dfs tree") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Topology t = random_connected_topology(200, 8.0, 7000 + seed);
        const NodeId anchor = static_cast<NodeId>(mix64(seed) % t.node_count());
        CHECK(setup_ospvcs(t, anchor).tree_depth() <= setup_spvcs(t, anchor).tree_depth());
    }
}

TEST_CASE("a long chain does not overflow the stack") {
    const Topology t = make_path(20000);
    const SpanLabeling l = setup_spvcs(t, 0);
    CHECK(l.labels[19999].spvc == 19999);
    CHECK(l.labels[0].max_range == 19999);
    CHECK(l.tree_depth() == 19999);
}

TEST_CASE("disconnected topologies are reported with the unlabeled nodes") {
    const Topology t = build_topology({{0.0, 0.0}, {1.0, 0.0}, {50.0, 0.0}}, 2.0);
    for (auto setup : {setup_spvcs, setup_ospvcs}) {
        try {
            setup(t, 0);
            FAIL("expected a disconnection error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("2") != std::string::npos);
        }
    }
}

TEST_CASE("label dump format") {
    const Topology t = make_path(3);
    std::stringstream ss;
    dump_labels(setup_spvcs(t, 0), ss);
    CHECK(ss.str() == "0 0 2 0\n1 1 2 0\n2 2 2 1\n");
}
