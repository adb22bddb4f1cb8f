#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "spanpath/experiment.hpp"
#include "spanpath/rng.hpp"

using namespace spanpath;

namespace {

Area parse_area(const std::string& s) {
    const auto x = s.find_first_of("xX");
    if (x == std::string::npos)
        throw CLI::ValidationError("--area", "expected WIDTHxHEIGHT, e.g. 100x100");
    try {
        const double w = std::stod(s.substr(0, x));
        const double h = std::stod(s.substr(x + 1));
        if (w <= 0.0 || h <= 0.0)
            throw CLI::ValidationError("--area", "dimensions must be positive");
        return {w, h};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--area", "expected WIDTHxHEIGHT, e.g. 100x100");
    }
}

// Scenario files carry no area; fall back to the positions' bounding box.
Area deduce_area(const Topology& t) {
    Area a{1.0, 1.0};
    for (const Position& p : t.positions) {
        a.width = std::max(a.width, p.x);
        a.height = std::max(a.height, p.y);
    }
    return a;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-")
        return std::cout;
    file.open(path);
    if (!file)
        throw std::runtime_error("cannot open output file " + path);
    return file;
}

std::vector<Protocol> parse_protocols(const std::vector<std::string>& names) {
    std::vector<Protocol> out;
    for (const std::string& n : names)
        out.push_back(parse_protocol(n));
    return out;
}

struct GenerateOpts {
    std::size_t nodes = 200;
    std::string area = "100x100";
    std::string deployment = "uniform";
    double range = 12.0;
    std::uint64_t seed = 1;
    std::string output;
};

int run_generate(const GenerateOpts& o) {
    const Area area = parse_area(o.area);
    auto positions = parse_deployment(o.deployment) == Deployment::uniform
                         ? generate_uniform(o.nodes, area, o.seed)
                         : generate_c_shape(o.nodes, area, o.seed);
    const Topology t = build_topology(std::move(positions), o.range);
    std::ofstream file;
    save_scenario(t, open_output(file, o.output));
    std::cerr << "generated " << o.nodes << " nodes, mean degree " << t.mean_degree()
              << (is_connected(t) ? ", connected" : ", NOT connected") << "\n";
    return 0;
}

struct LabelOpts {
    std::string input;
    std::string type = "spvcs";
    std::string anchor_strategy;
    std::vector<NodeId> anchor_ids;
    std::size_t anchors = 0;
    std::size_t iterations = 1;
    std::uint64_t seed = 1;
    std::string area;
    std::string output;
};

int run_label(const LabelOpts& o) {
    const Topology t = load_scenario(o.input);
    const Area area = o.area.empty() ? deduce_area(t) : parse_area(o.area);
    const bool span = o.type == "spvcs" || o.type == "ospvcs";

    AnchorStrategy strategy;
    if (!o.anchor_ids.empty())
        strategy = AnchorStrategy::given;
    else if (!o.anchor_strategy.empty())
        strategy = parse_anchor_strategy(o.anchor_strategy);
    else
        strategy = span ? AnchorStrategy::center : AnchorStrategy::corners;
    std::size_t k = o.anchors;
    if (k == 0)
        k = !o.anchor_ids.empty() ? o.anchor_ids.size() : (span ? 1 : 4);

    const auto anchors = select_anchors(t, area, strategy, k, o.seed, o.anchor_ids);
    std::ofstream file;
    std::ostream& out = open_output(file, o.output);
    if (o.type == "vcs") {
        dump_coordinates(assign_vcs(t, anchors), out);
    } else if (o.type == "avcs") {
        dump_coordinates(align_coordinates(assign_vcs(t, anchors), t, o.iterations), out);
    } else if (o.type == "spvcs") {
        dump_labels(setup_spvcs(t, anchors.front()), out);
    } else if (o.type == "ospvcs") {
        dump_labels(setup_ospvcs(t, anchors.front()), out);
    } else {
        throw std::runtime_error("unknown label type " + o.type +
                                 " (expected vcs|avcs|spvcs|ospvcs)");
    }
    return 0;
}

struct RouteOpts {
    std::string input;
    std::string protocol = "spr";
    NodeId src = 0;
    NodeId dst = 0;
    bool trace = false;
    std::string anchor_strategy = "center";
    std::uint64_t seed = 1;
    std::string area;
    double ttl_factor = 4.0;
    bool reenter_greedy = false;
    std::size_t bvr_anchors = 10;
    std::size_t align_iterations = 1;
};

int run_route(const RouteOpts& o) {
    Topology t = load_scenario(o.input);
    EvalOptions options;
    options.area = o.area.empty() ? deduce_area(t) : parse_area(o.area);
    options.span_anchor = parse_anchor_strategy(o.anchor_strategy);
    options.ttl_factor = o.ttl_factor;
    options.reenter_greedy = o.reenter_greedy;
    options.bvr_anchors = o.bvr_anchors;
    options.align_iterations = o.align_iterations;

    const auto hops = bfs_hops(t, o.src);
    const std::int32_t shortest =
        o.dst < hops.size() ? hops[o.dst] : kUnreachable;

    ScenarioContext ctx(std::move(t), o.seed, options);
    const RouteResult r = ctx.route(parse_protocol(o.protocol), o.src, o.dst);

    if (o.trace)
        write_trace(r, std::cout);
    if (r.delivered) {
        std::cout << "delivered in " << r.hop_count() << " hops (shortest " << shortest;
        if (shortest > 0)
            std::cout << ", stretch "
                      << static_cast<double>(r.hop_count()) / static_cast<double>(shortest);
        std::cout << ")\npath:";
        for (NodeId v : r.path)
            std::cout << ' ' << v;
        std::cout << '\n';
        if (r.flood_tx > 0)
            std::cout << "flood transmissions: " << r.flood_tx << '\n';
    } else {
        std::cout << "failed (" << to_string(r.reason) << ") after " << r.hop_count()
                  << " hops\n";
    }
    return 0;
}

struct ExperimentOpts {
    std::size_t nodes = 200;
    std::string area = "100x100";
    std::string deployment = "uniform";
    std::vector<double> ranges;
    std::size_t trials = 30;
    std::uint64_t seed = 1;
    std::vector<std::string> protocols;
    std::string anchor_strategy = "center";
    double ttl_factor = 4.0;
    bool reenter_greedy = false;
    std::size_t bvr_anchors = 10;
    std::size_t align_iterations = 1;
    std::string output;
    std::vector<std::string> placements; // anchors subcommand only
};

ExperimentConfig to_config(const ExperimentOpts& o) {
    ExperimentConfig cfg;
    cfg.node_count = o.nodes;
    cfg.area = parse_area(o.area);
    cfg.deployment = parse_deployment(o.deployment);
    cfg.radio_ranges = o.ranges;
    cfg.trials = o.trials;
    cfg.base_seed = o.seed;
    cfg.protocols = parse_protocols(o.protocols);
    cfg.options.span_anchor = parse_anchor_strategy(o.anchor_strategy);
    cfg.options.ttl_factor = o.ttl_factor;
    cfg.options.reenter_greedy = o.reenter_greedy;
    cfg.options.bvr_anchors = o.bvr_anchors;
    cfg.options.align_iterations = o.align_iterations;
    return cfg;
}

std::vector<std::string> config_metadata(const ExperimentConfig& cfg,
                                         std::uint64_t regenerated) {
    std::vector<std::string> meta;
    std::ostringstream ss;
    ss << "nodes=" << cfg.node_count << " area=" << cfg.area.width << 'x' << cfg.area.height
       << " deployment=" << to_string(cfg.deployment) << " trials=" << cfg.trials
       << " base_seed=" << cfg.base_seed;
    meta.push_back(ss.str());
    meta.push_back("regenerated_scenarios=" + std::to_string(regenerated));
    for (Protocol p : cfg.protocols)
        if (p == Protocol::lcr)
            meta.push_back("lcr_visited_state=packet-carried");
    return meta;
}

int run_experiment_cmd(const ExperimentOpts& o) {
    const ExperimentConfig cfg = to_config(o);
    const ExperimentResult res = run_experiment(cfg);
    std::ofstream file;
    emit_csv(res.rows, open_output(file, o.output),
             config_metadata(cfg, res.regenerated_scenarios));
    std::cerr << res.rows.size() << " rows";
    if (res.regenerated_scenarios > 0)
        std::cerr << " (" << res.regenerated_scenarios << " disconnected draws regenerated)";
    std::cerr << "\n";
    return 0;
}

int run_anchor_study(const ExperimentOpts& o) {
    ExperimentOpts adjusted = o;
    if (adjusted.protocols.empty())
        adjusted.protocols = {"spr"};
    const ExperimentConfig cfg = to_config(adjusted);
    std::vector<AnchorStrategy> placements;
    for (const std::string& p : o.placements)
        placements.push_back(parse_anchor_strategy(p == "corner" ? "corners" : p));
    if (placements.empty())
        placements = {AnchorStrategy::center, AnchorStrategy::corners, AnchorStrategy::random};

    const auto study = anchor_impact_study(cfg, placements);
    std::vector<MetricsRow> rows;
    for (const auto& [placement, placement_rows] : study) {
        for (MetricsRow row : placement_rows) {
            row.protocol += std::string("@") + to_string(placement);
            rows.push_back(std::move(row));
        }
    }
    std::ofstream file;
    emit_csv(rows, open_output(file, o.output), config_metadata(cfg, 0));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric routing simulator on spanning-path virtual coordinates"};
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* generate = app.add_subcommand("generate", "emit a scenario file");
    generate->add_option("--nodes", gen.nodes, "node count")->check(CLI::PositiveNumber);
    generate->add_option("--area", gen.area, "deployment area WxH");
    generate->add_option("--deployment", gen.deployment, "uniform|cshape");
    generate->add_option("--range", gen.range, "radio range")->check(CLI::PositiveNumber);
    generate->add_option("--seed", gen.seed, "rng seed");
    generate->add_option("--output,-o", gen.output, "output path (default stdout)");

    LabelOpts lab;
    CLI::App* label = app.add_subcommand("label", "emit coordinate or label dumps");
    label->add_option("--input,-i", lab.input, "scenario file")->required();
    label->add_option("--type", lab.type, "vcs|avcs|spvcs|ospvcs");
    label->add_option("--anchor-strategy", lab.anchor_strategy, "corners|random|center");
    label->add_option("--anchor-ids", lab.anchor_ids, "explicit anchor ids")->delimiter(',');
    label->add_option("--anchors", lab.anchors, "anchor count");
    label->add_option("--iterations", lab.iterations, "alignment iterations (avcs)");
    label->add_option("--seed", lab.seed, "rng seed for random anchors");
    label->add_option("--area", lab.area, "area override WxH (default: bounding box)");
    label->add_option("--output,-o", lab.output, "output path (default stdout)");

    RouteOpts rt;
    CLI::App* route = app.add_subcommand("route", "route one packet and print the result");
    route->add_option("--input,-i", rt.input, "scenario file")->required();
    route->add_option("--protocol", rt.protocol, "protocol name");
    route->add_option("--src", rt.src, "source node id")->required();
    route->add_option("--dst", rt.dst, "destination node id")->required();
    route->add_flag("--trace", rt.trace, "print one line per hop");
    route->add_option("--anchor-strategy", rt.anchor_strategy, "span anchor placement");
    route->add_option("--seed", rt.seed, "rng seed for anchor selection");
    route->add_option("--area", rt.area, "area override WxH");
    route->add_option("--ttl-factor", rt.ttl_factor, "hop budget = factor * nodes");
    route->add_flag("--reenter-greedy", rt.reenter_greedy, "hybrid may resume greedy");
    route->add_option("--bvr-anchors", rt.bvr_anchors, "anchor count for bvr");
    route->add_option("--align-iterations", rt.align_iterations, "avcs iterations");

    ExperimentOpts exp;
    CLI::App* experiment = app.add_subcommand("experiment", "run a sweep and emit CSV");
    auto add_experiment_options = [](CLI::App* cmd, ExperimentOpts& o) {
        cmd->add_option("--nodes", o.nodes, "node count")->check(CLI::PositiveNumber);
        cmd->add_option("--area", o.area, "deployment area WxH");
        cmd->add_option("--deployment", o.deployment, "uniform|cshape");
        cmd->add_option("--ranges", o.ranges, "radio ranges")->delimiter(',')->required();
        cmd->add_option("--trials", o.trials, "seeds per range")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", o.seed, "base seed");
        cmd->add_option("--anchor-strategy", o.anchor_strategy, "span anchor placement");
        cmd->add_option("--ttl-factor", o.ttl_factor, "hop budget = factor * nodes");
        cmd->add_flag("--reenter-greedy", o.reenter_greedy, "hybrid may resume greedy");
        cmd->add_option("--bvr-anchors", o.bvr_anchors, "anchor count for bvr");
        cmd->add_option("--align-iterations", o.align_iterations, "avcs iterations");
        cmd->add_option("--output,-o", o.output, "CSV path (default stdout)");
    };
    add_experiment_options(experiment, exp);
    experiment->add_option("--protocols", exp.protocols, "protocol list")
        ->delimiter(',')
        ->required();

    ExperimentOpts anc;
    CLI::App* anchors = app.add_subcommand("anchors", "anchor placement study");
    add_experiment_options(anchors, anc);
    anchors->add_option("--protocols", anc.protocols, "span protocols (default spr)")
        ->delimiter(',');
    anchors->add_option("--placements", anc.placements, "center,corner,random subset")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed())
            return run_generate(gen);
        if (label->parsed())
            return run_label(lab);
        if (route->parsed())
            return run_route(rt);
        if (experiment->parsed())
            return run_experiment_cmd(exp);
        if (anchors->parsed())
            return run_anchor_study(anc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
