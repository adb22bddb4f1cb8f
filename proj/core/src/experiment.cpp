#include "spanpath/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "spanpath/rng.hpp"

namespace spanpath {

const char* to_string(Protocol p) {
    switch (p) {
    case Protocol::sp: return "sp";
    case Protocol::gf_geo: return "gf-geo";
    case Protocol::gpsr_gg: return "gpsr-gg";
    case Protocol::gpsr_rng: return "gpsr-rng";
    case Protocol::gf_vcs: return "gf-vcs";
    case Protocol::gf_avcs: return "gf-avcs";
    case Protocol::lcr: return "lcr";
    case Protocol::bvr: return "bvr";
    case Protocol::spr: return "spr";
    case Protocol::ospr: return "ospr";
    case Protocol::agsp: return "agsp";
    }
    return "?";
}

Protocol parse_protocol(const std::string& name) {
    static const std::pair<const char*, Protocol> table[] = {
        {"sp", Protocol::sp},           {"gf-geo", Protocol::gf_geo},
        {"gpsr-gg", Protocol::gpsr_gg}, {"gpsr-rng", Protocol::gpsr_rng},
        {"gf-vcs", Protocol::gf_vcs},   {"gf-avcs", Protocol::gf_avcs},
        {"lcr", Protocol::lcr},         {"bvr", Protocol::bvr},
        {"spr", Protocol::spr},         {"ospr", Protocol::ospr},
        {"agsp", Protocol::agsp},
    };
    for (const auto& [n, p] : table)
        if (name == n)
            return p;
    throw std::invalid_argument("unknown protocol: " + name);
}

const char* to_string(Deployment d) {
    return d == Deployment::uniform ? "uniform" : "cshape";
}

Deployment parse_deployment(const std::string& name) {
    if (name == "uniform")
        return Deployment::uniform;
    if (name == "cshape" || name == "c-shape")
        return Deployment::c_shape;
    throw std::invalid_argument("unknown deployment: " + name);
}

ScenarioContext::ScenarioContext(Topology topology, std::uint64_t seed, EvalOptions options)
    : topology_(std::move(topology)), seed_(seed), options_(options) {}

HopBudget ScenarioContext::budget() const {
    const double ttl = options_.ttl_factor * static_cast<double>(topology_.node_count());
    return HopBudget{std::max<std::size_t>(static_cast<std::size_t>(ttl), 1)};
}

const HopMatrix& ScenarioContext::shortest_hops() {
    if (!shortest_hops_)
        shortest_hops_ = all_pairs_shortest_hops(topology_);
    return *shortest_hops_;
}

const CoordView& ScenarioContext::geo_view() {
    if (!geo_view_)
        geo_view_ = geographic_view(topology_);
    return *geo_view_;
}

const PlanarSubgraph& ScenarioContext::gabriel() {
    if (!gabriel_)
        gabriel_ = gabriel_graph(topology_);
    return *gabriel_;
}

const PlanarSubgraph& ScenarioContext::relative_neighborhood() {
    if (!rng_)
        rng_ = rng_graph(topology_);
    return *rng_;
}

const CoordinateAssignment& ScenarioContext::corner_vcs() {
    if (!corner_vcs_) {
        const auto anchors = select_anchors(topology_, options_.area, AnchorStrategy::corners,
                                            std::min<std::size_t>(options_.vcs_anchors,
                                                                  topology_.node_count()),
                                            seed_);
        corner_vcs_ = assign_vcs(topology_, anchors);
    }
    return *corner_vcs_;
}

const CoordView& ScenarioContext::corner_vcs_as_view() {
    if (!corner_vcs_view_)
        corner_vcs_view_ = vcs_view(corner_vcs());
    return *corner_vcs_view_;
}

const AlignedAssignment& ScenarioContext::aligned() {
    if (!aligned_)
        aligned_ = align_coordinates(corner_vcs(), topology_, options_.align_iterations);
    return *aligned_;
}

const CoordView& ScenarioContext::aligned_as_view() {
    if (!aligned_view_)
        aligned_view_ = aligned_view(aligned());
    return *aligned_view_;
}

const CoordinateAssignment& ScenarioContext::bvr_vcs() {
    if (!bvr_vcs_) {
        const auto anchors =
            select_anchors(topology_, options_.area, AnchorStrategy::random,
                           options_.bvr_anchors, mix64(seed_ ^ 0xb7e151628aed2a6bull));
        bvr_vcs_ = assign_vcs(topology_, anchors);
    }
    return *bvr_vcs_;
}

namespace {

NodeId span_anchor_node(const Topology& t, Area area, AnchorStrategy strategy,
                        std::uint64_t seed) {
    if (strategy == AnchorStrategy::given)
        throw std::invalid_argument("span anchor placement must be corners, random or center");
    // with the corners strategy the single anchor lands nearest (0, 0)
    return select_anchors(t, area, strategy, 1, mix64(seed ^ 0x243f6a8885a308d3ull)).front();
}

} // namespace

const SpanLabeling& ScenarioContext::span_dfs() {
    if (!span_dfs_)
        span_dfs_ = setup_spvcs(topology_, span_anchor_node(topology_, options_.area,
                                                            options_.span_anchor, seed_));
    return *span_dfs_;
}

const SpanLabeling& ScenarioContext::span_bfs() {
    if (!span_bfs_)
        span_bfs_ = setup_ospvcs(topology_, span_anchor_node(topology_, options_.area,
                                                             options_.span_anchor, seed_));
    return *span_bfs_;
}

RouteResult ScenarioContext::route(Protocol p, NodeId src, NodeId dst) {
    const HopBudget b = budget();
    switch (p) {
    case Protocol::sp:
        return sp_route(topology_, shortest_hops(), src, dst, b);
    case Protocol::gf_geo:
        return greedy_forward(topology_, geo_view(), Metric::euclidean, src, dst, b);
    case Protocol::gpsr_gg:
        return gpsr_route(topology_, gabriel(), src, dst, b);
    case Protocol::gpsr_rng:
        return gpsr_route(topology_, relative_neighborhood(), src, dst, b);
    case Protocol::gf_vcs:
        return greedy_forward(topology_, corner_vcs_as_view(), Metric::euclidean, src, dst, b);
    case Protocol::gf_avcs:
        return greedy_forward(topology_, aligned_as_view(), Metric::euclidean, src, dst, b);
    case Protocol::lcr:
        return lcr_route(corner_vcs(), topology_, src, dst, b);
    case Protocol::bvr:
        return bvr_route(bvr_vcs(), topology_, src, dst, b);
    case Protocol::spr:
        return spr_route(span_dfs(), topology_, src, dst, b);
    case Protocol::ospr:
        return spr_route(span_bfs(), topology_, src, dst, b);
    case Protocol::agsp:
        return agsp_route(aligned(), span_dfs(), topology_, src, dst, b,
                          options_.reenter_greedy);
    }
    throw std::logic_error("unhandled protocol");
}

namespace {

double percentile95(std::vector<double>& values) {
    if (values.empty())
        return 0.0;
    std::sort(values.begin(), values.end());
    // nearest-rank definition
    const std::size_t rank =
        static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(values.size())));
    return values[std::min(values.size() - 1, rank == 0 ? 0 : rank - 1)];
}

} // namespace

ScenarioEvaluation evaluate_protocol(ScenarioContext& ctx, Protocol p) {
    const std::size_t n = ctx.topology().node_count();
    const HopMatrix& oracle = ctx.shortest_hops();

    ScenarioEvaluation ev;
    std::size_t pairs = 0;
    std::size_t delivered = 0;
    std::size_t greedy_only = 0;
    double stretch_sum = 0.0;
    double flood_sum = 0.0;
    std::vector<double> stretches;
    stretches.reserve(n * (n - 1));

    for (NodeId src = 0; src < n; ++src) {
        for (NodeId dst = 0; dst < n; ++dst) {
            if (src == dst || !oracle.reachable(src, dst))
                continue;
            ++pairs;
            const RouteResult r = ctx.route(p, src, dst);
            // non-greedy runs = complementary-phase activations
            bool in_recovery = false;
            for (HopMode m : r.modes) {
                if (m != HopMode::greedy) {
                    ++ev.recovery_hops;
                    if (!in_recovery) {
                        ++ev.recoveries;
                        in_recovery = true;
                    }
                } else {
                    in_recovery = false;
                }
            }
            if (!r.delivered)
                continue;
            ++delivered;
            if (r.greedy_only())
                ++greedy_only;
            const double stretch = static_cast<double>(r.hop_count()) /
                                   static_cast<double>(oracle(src, dst));
            stretch_sum += stretch;
            stretches.push_back(stretch);
            flood_sum += static_cast<double>(r.flood_tx);
        }
    }

    MetricsRow& row = ev.row;
    row.seed = ctx.seed();
    row.protocol = to_string(p);
    row.radio_range = ctx.topology().radio_range;
    row.mean_degree = ctx.topology().mean_degree();
    if (pairs == 0) {
        // degenerate scenario (single node): vacuously perfect
        row.delivery_ratio = 1.0;
        row.greedy_ratio = 1.0;
        row.avg_stretch = 0.0;
        row.p95_stretch = 0.0;
        row.flood_tx = 0.0;
        return ev;
    }
    row.delivery_ratio = static_cast<double>(delivered) / static_cast<double>(pairs);
    row.greedy_ratio =
        delivered == 0 ? 0.0 : static_cast<double>(greedy_only) / static_cast<double>(delivered);
    row.avg_stretch = delivered == 0 ? 0.0 : stretch_sum / static_cast<double>(delivered);
    row.p95_stretch = percentile95(stretches);
    row.flood_tx = delivered == 0 ? 0.0 : flood_sum / static_cast<double>(delivered);
    return ev;
}

Topology make_connected_topology(const ExperimentConfig& cfg, std::size_t trial,
                                 std::size_t range_index, std::uint64_t& scenario_seed,
                                 std::size_t& attempts_used) {
    const double range = cfg.radio_ranges.at(range_index);
    const std::size_t max_attempts = std::max<std::size_t>(cfg.trials, 100);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        scenario_seed = derive_seed(cfg.base_seed, trial, range_index, attempt);
        auto positions = cfg.deployment == Deployment::uniform
                             ? generate_uniform(cfg.node_count, cfg.area, scenario_seed)
                             : generate_c_shape(cfg.node_count, cfg.area, scenario_seed);
        Topology t = build_topology(std::move(positions), range);
        if (is_connected(t)) {
            attempts_used = attempt + 1;
            return t;
        }
    }
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "no connected scenario found in %zu attempts at range %.3f; "
                  "increase the radio range or node count",
                  max_attempts, range);
    throw std::runtime_error(msg);
}

namespace {

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.node_count == 0)
        throw std::invalid_argument("experiment: node count must be >= 1");
    if (cfg.trials == 0)
        throw std::invalid_argument("experiment: trials must be >= 1");
    if (cfg.radio_ranges.empty())
        throw std::invalid_argument("experiment: at least one radio range required");
    for (double r : cfg.radio_ranges)
        if (r <= 0.0)
            throw std::invalid_argument("experiment: radio ranges must be positive");
    if (cfg.protocols.empty())
        throw std::invalid_argument("experiment: at least one protocol required");
}

void sort_rows(std::vector<MetricsRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const MetricsRow& a, const MetricsRow& b) {
        if (a.protocol != b.protocol)
            return a.protocol < b.protocol;
        if (a.radio_range != b.radio_range)
            return a.radio_range < b.radio_range;
        return a.seed < b.seed;
    });
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    EvalOptions options = cfg.options;
    options.area = cfg.area;

    ExperimentResult result;
    for (std::size_t ri = 0; ri < cfg.radio_ranges.size(); ++ri) {
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
            std::uint64_t scenario_seed = 0;
            std::size_t attempts = 0;
            Topology t = make_connected_topology(cfg, trial, ri, scenario_seed, attempts);
            result.regenerated_scenarios += attempts - 1;
            ScenarioContext ctx(std::move(t), scenario_seed, options);
            for (Protocol p : cfg.protocols)
                result.rows.push_back(evaluate_protocol(ctx, p).row);
        }
    }
    sort_rows(result.rows);
    return result;
}

std::vector<std::pair<AnchorStrategy, std::vector<MetricsRow>>>
anchor_impact_study(const ExperimentConfig& cfg, const std::vector<AnchorStrategy>& placements) {
    const bool has_span = std::any_of(cfg.protocols.begin(), cfg.protocols.end(), [](Protocol p) {
        return p == Protocol::spr || p == Protocol::ospr;
    });
    if (!has_span)
        throw std::invalid_argument("anchor_impact_study: needs spr or ospr in protocols");
    std::vector<std::pair<AnchorStrategy, std::vector<MetricsRow>>> out;
    for (AnchorStrategy placement : placements) {
        ExperimentConfig variant = cfg;
        variant.options.span_anchor = placement;
        out.emplace_back(placement, run_experiment(variant).rows);
    }
    return out;
}

void emit_csv(const std::vector<MetricsRow>& rows, std::ostream& out,
              const std::vector<std::string>& metadata) {
    std::vector<MetricsRow> sorted = rows;
    sort_rows(sorted);
    for (const std::string& m : metadata)
        out << "# " << m << '\n';
    out << "seed,protocol,radio_range,mean_degree,delivery_ratio,greedy_ratio,"
           "avg_stretch,p95_stretch,flood_tx\n";
    char buf[256];
    for (const MetricsRow& r : sorted) {
        std::snprintf(buf, sizeof(buf), "%llu,%s,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                      static_cast<unsigned long long>(r.seed), r.protocol.c_str(),
                      r.radio_range, r.mean_degree, r.delivery_ratio, r.greedy_ratio,
                      r.avg_stretch, r.p95_stretch, r.flood_tx);
        out << buf;
    }
    if (!out)
        throw std::runtime_error("emit_csv: write failed");
}

void emit_csv(const std::vector<MetricsRow>& rows, const std::string& path,
              const std::vector<std::string>& metadata) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("emit_csv: cannot open " + path);
    emit_csv(rows, out, metadata);
}

std::vector<MetricsRow> load_metrics_csv(std::istream& in) {
    std::vector<MetricsRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            header_seen = true; // column names, fixed layout
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        MetricsRow r;
        auto next = [&]() {
            if (!std::getline(ss, field, ','))
                throw std::runtime_error("load_metrics_csv: short row: " + line);
            return field;
        };
        r.seed = std::stoull(next());
        r.protocol = next();
        r.radio_range = std::stod(next());
        r.mean_degree = std::stod(next());
        r.delivery_ratio = std::stod(next());
        r.greedy_ratio = std::stod(next());
        r.avg_stretch = std::stod(next());
        r.p95_stretch = std::stod(next());
        r.flood_tx = std::stod(next());
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<MetricsRow> load_metrics_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_metrics_csv: cannot open " + path);
    return load_metrics_csv(in);
}

} // namespace spanpath
