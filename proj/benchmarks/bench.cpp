#include <benchmark/benchmark.h>

#include "spanpath/experiment.hpp"
#include "spanpath/rng.hpp"

using namespace spanpath;

namespace {

Topology scenario(std::size_t n) {
    // range tuned for mean degree ~9; retry seeds until connected
    const double range = std::sqrt(9.0 * 10000.0 / (3.141592653589793 * n));
    for (std::uint64_t attempt = 0;; ++attempt) {
        Topology t = build_topology(generate_uniform(n, {100.0, 100.0}, mix64(7 + attempt)), range);
        if (is_connected(t))
            return t;
    }
}

void BM_BuildTopology(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const auto pos = generate_uniform(n, {100.0, 100.0}, 11);
    for (auto _ : state) {
        Topology t = build_topology(pos, 12.0);
        benchmark::DoNotOptimize(t.adjacency.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTopology)->RangeMultiplier(2)->Range(125, 1000)->Complexity();

void BM_AllPairsShortestHops(benchmark::State& state) {
    const Topology t = scenario(state.range(0));
    for (auto _ : state) {
        HopMatrix m = all_pairs_shortest_hops(t);
        benchmark::DoNotOptimize(m(0, 1));
    }
}
BENCHMARK(BM_AllPairsShortestHops)->Arg(200)->Arg(500)->Arg(1000);

void BM_GabrielGraph(benchmark::State& state) {
    const Topology t = scenario(state.range(0));
    for (auto _ : state) {
        PlanarSubgraph g = gabriel_graph(t);
        benchmark::DoNotOptimize(g.kept.data());
    }
}
BENCHMARK(BM_GabrielGraph)->Arg(200)->Arg(500)->Arg(1000);

void BM_SetupLabels(benchmark::State& state) {
    const Topology t = scenario(state.range(0));
    const bool bfs = state.range(1) != 0;
    for (auto _ : state) {
        SpanLabeling l = bfs ? setup_ospvcs(t, 0) : setup_spvcs(t, 0);
        benchmark::DoNotOptimize(l.labels.data());
    }
}
BENCHMARK(BM_SetupLabels)->Args({200, 0})->Args({200, 1})->Args({1000, 0})->Args({1000, 1});

void BM_SpanRoute(benchmark::State& state) {
    const Topology t = scenario(state.range(0));
    const SpanLabeling l = setup_spvcs(t, 0);
    const HopBudget budget = default_budget(t);
    std::mt19937_64 eng(3);
    std::size_t hops = 0;
    for (auto _ : state) {
        const NodeId src = static_cast<NodeId>(uniform_below(eng, t.node_count()));
        const NodeId dst = static_cast<NodeId>(uniform_below(eng, t.node_count()));
        const RouteResult r = spr_route(l, t, src, dst, budget);
        hops += r.hop_count();
        benchmark::DoNotOptimize(r.delivered);
    }
    state.counters["hops/route"] =
        benchmark::Counter(static_cast<double>(hops), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_SpanRoute)->Arg(200)->Arg(1000);

void BM_HybridRoute(benchmark::State& state) {
    const Topology t = scenario(state.range(0));
    const auto anchors = select_anchors(t, {100.0, 100.0}, AnchorStrategy::corners, 4, 0);
    const AlignedAssignment aligned = align_coordinates(assign_vcs(t, anchors), t, 1);
    const SpanLabeling l =
        setup_spvcs(t, select_anchors(t, {100.0, 100.0}, AnchorStrategy::center, 1, 0).front());
    const HopBudget budget = default_budget(t);
    std::mt19937_64 eng(5);
    for (auto _ : state) {
        const NodeId src = static_cast<NodeId>(uniform_below(eng, t.node_count()));
        const NodeId dst = static_cast<NodeId>(uniform_below(eng, t.node_count()));
        const RouteResult r = agsp_route(aligned, l, t, src, dst, budget);
        benchmark::DoNotOptimize(r.delivered);
    }
}
BENCHMARK(BM_HybridRoute)->Arg(200)->Arg(1000);

void BM_FaceRoute(benchmark::State& state) {
    const Topology t = scenario(state.range(0));
    const PlanarSubgraph gg = gabriel_graph(t);
    const HopBudget budget = default_budget(t);
    std::mt19937_64 eng(9);
    for (auto _ : state) {
        const NodeId src = static_cast<NodeId>(uniform_below(eng, t.node_count()));
        const NodeId dst = static_cast<NodeId>(uniform_below(eng, t.node_count()));
        const RouteResult r = gpsr_route(t, gg, src, dst, budget);
        benchmark::DoNotOptimize(r.delivered);
    }
}
BENCHMARK(BM_FaceRoute)->Arg(200)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
