#ifndef SPANPATH_EXPERIMENT_HPP
#define SPANPATH_EXPERIMENT_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "spanpath/routing.hpp"

namespace spanpath {

enum class Protocol {
    sp,
    gf_geo,
    gpsr_gg,
    gpsr_rng,
    gf_vcs,
    gf_avcs,
    lcr,
    bvr,
    spr,
    ospr,
    agsp,
};

const char* to_string(Protocol p);
Protocol parse_protocol(const std::string& name);

enum class Deployment { uniform, c_shape };

const char* to_string(Deployment d);
Deployment parse_deployment(const std::string& name);

// Knobs shared by every protocol evaluation of one scenario.
struct EvalOptions {
    Area area{100.0, 100.0};
    AnchorStrategy span_anchor = AnchorStrategy::center; // spvcs/ospvcs anchor placement
    std::size_t vcs_anchors = 4;                          // corner anchors for vcs/avcs/lcr
    std::size_t bvr_anchors = 10;                         // random anchors for bvr
    std::size_t align_iterations = 1;
    double ttl_factor = 4.0;
    bool reenter_greedy = false;
};

struct ExperimentConfig {
    std::size_t node_count = 200;
    Area area{100.0, 100.0};
    Deployment deployment = Deployment::uniform;
    std::vector<double> radio_ranges;
    std::size_t trials = 30;
    std::uint64_t base_seed = 1;
    std::vector<Protocol> protocols;
    EvalOptions options;
};

// One CSV line: metrics for a single (seed, protocol, radio range) cell,
// aggregated over all ordered node pairs of the scenario.
struct MetricsRow {
    std::uint64_t seed = 0;
    std::string protocol;
    double radio_range = 0.0;
    double mean_degree = 0.0;
    double delivery_ratio = 0.0;
    double greedy_ratio = 0.0;
    double avg_stretch = 0.0;
    double p95_stretch = 0.0;
    double flood_tx = 0.0;

    friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

// Per-scenario structures built once and shared by every protocol that needs
// them. Everything is immutable after construction, so concurrent readers
// are safe; construction itself is lazy and single-threaded.
class ScenarioContext {
public:
    ScenarioContext(Topology topology, std::uint64_t seed, EvalOptions options);

    const Topology& topology() const { return topology_; }
    std::uint64_t seed() const { return seed_; }
    const EvalOptions& options() const { return options_; }
    HopBudget budget() const;

    const HopMatrix& shortest_hops();
    const CoordView& geo_view();
    const PlanarSubgraph& gabriel();
    const PlanarSubgraph& relative_neighborhood();
    const CoordinateAssignment& corner_vcs();
    const CoordView& corner_vcs_as_view();
    const AlignedAssignment& aligned();
    const CoordView& aligned_as_view();
    const CoordinateAssignment& bvr_vcs();
    const SpanLabeling& span_dfs();
    const SpanLabeling& span_bfs();

    RouteResult route(Protocol p, NodeId src, NodeId dst);

private:
    Topology topology_;
    std::uint64_t seed_;
    EvalOptions options_;

    std::optional<HopMatrix> shortest_hops_;
    std::optional<CoordView> geo_view_;
    std::optional<PlanarSubgraph> gabriel_;
    std::optional<PlanarSubgraph> rng_;
    std::optional<CoordinateAssignment> corner_vcs_;
    std::optional<CoordView> corner_vcs_view_;
    std::optional<AlignedAssignment> aligned_;
    std::optional<CoordView> aligned_view_;
    std::optional<CoordinateAssignment> bvr_vcs_;
    std::optional<SpanLabeling> span_dfs_;
    std::optional<SpanLabeling> span_bfs_;
};

// Routes every ordered pair under one protocol and aggregates the metrics.
// recovery_hops / recoveries count non-greedy hops and maximal non-greedy
// runs, which quantify how much work the complementary phase does.
struct ScenarioEvaluation {
    MetricsRow row;
    std::uint64_t recovery_hops = 0;
    std::uint64_t recoveries = 0;
};

ScenarioEvaluation evaluate_protocol(ScenarioContext& ctx, Protocol p);

// Deployment generation that retries derived seeds until the topology is
// connected. attempts_used reports how many draws were needed.
Topology make_connected_topology(const ExperimentConfig& cfg, std::size_t trial,
                                 std::size_t range_index, std::uint64_t& scenario_seed,
                                 std::size_t& attempts_used);

struct ExperimentResult {
    std::vector<MetricsRow> rows;
    std::uint64_t regenerated_scenarios = 0; // disconnected draws thrown away
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Re-runs the span protocols with each anchor placement over the same
// scenario seeds.
std::vector<std::pair<AnchorStrategy, std::vector<MetricsRow>>>
anchor_impact_study(const ExperimentConfig& cfg, const std::vector<AnchorStrategy>& placements);

// Header, then one line per row sorted by (protocol, radio_range, seed),
// reals at six decimal places. Metadata lines, when given, are written first
// with a leading '#'.
void emit_csv(const std::vector<MetricsRow>& rows, std::ostream& out,
              const std::vector<std::string>& metadata = {});
void emit_csv(const std::vector<MetricsRow>& rows, const std::string& path,
              const std::vector<std::string>& metadata = {});

std::vector<MetricsRow> load_metrics_csv(std::istream& in);
std::vector<MetricsRow> load_metrics_csv(const std::string& path);

} // namespace spanpath

#endif
