#include "spanpath/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "spanpath/rng.hpp"

namespace spanpath {

double euclidean(const Position& a, const Position& b) {
    return std::sqrt(squared_distance(a, b));
}

std::size_t Topology::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& nbrs : adjacency)
        deg_sum += nbrs.size();
    return deg_sum / 2;
}

double Topology::mean_degree() const {
    if (positions.empty())
        return 0.0;
    return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(positions.size());
}

std::vector<Position> generate_uniform(std::size_t n, Area area, std::uint64_t seed) {
    if (n == 0)
        throw std::invalid_argument("generate_uniform: node count must be >= 1");
    if (area.width <= 0.0 || area.height <= 0.0)
        throw std::invalid_argument("generate_uniform: area dimensions must be positive");
    std::mt19937_64 eng(seed);
    std::vector<Position> positions;
    positions.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = uniform_in(eng, 0.0, area.width);
        const double y = uniform_in(eng, 0.0, area.height);
        positions.push_back({x, y});
    }
    return positions;
}

bool in_c_notch(Area area, const Position& p) {
    return p.x >= 0.4 * area.width && p.y > area.height / 3.0 && p.y < 2.0 * area.height / 3.0;
}

std::vector<Position> generate_c_shape(std::size_t n, Area area, std::uint64_t seed) {
    if (n == 0)
        throw std::invalid_argument("generate_c_shape: node count must be >= 1");
    if (area.width <= 0.0 || area.height <= 0.0)
        throw std::invalid_argument("generate_c_shape: area dimensions must be positive");
    std::mt19937_64 eng(seed);
    std::vector<Position> positions;
    positions.reserve(n);
    while (positions.size() < n) {
        const Position p{uniform_in(eng, 0.0, area.width), uniform_in(eng, 0.0, area.height)};
        if (!in_c_notch(area, p))
            positions.push_back(p);
    }
    return positions;
}

Topology build_topology(std::vector<Position> positions, double radio_range) {
    if (radio_range <= 0.0)
        throw std::invalid_argument("build_topology: radio range must be positive");
    Topology t;
    t.positions = std::move(positions);
    t.radio_range = radio_range;
    const std::size_t n = t.positions.size();
    t.adjacency.assign(n, {});
    const double range_sq = radio_range * radio_range;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (squared_distance(t.positions[u], t.positions[v]) <= range_sq) {
                t.adjacency[u].push_back(static_cast<NodeId>(v));
                t.adjacency[v].push_back(static_cast<NodeId>(u));
            }
        }
    }
    // v > u appends keep each list sorted already; nothing else to do.
    return t;
}

std::vector<std::int32_t> bfs_hops(const Topology& t, NodeId source) {
    const std::size_t n = t.node_count();
    std::vector<std::int32_t> hops(n, kUnreachable);
    if (source >= n)
        throw std::invalid_argument("bfs_hops: source out of range");
    std::queue<NodeId> queue;
    hops[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop();
        for (NodeId w : t.adjacency[v]) {
            if (hops[w] == kUnreachable) {
                hops[w] = hops[v] + 1;
                queue.push(w);
            }
        }
    }
    return hops;
}

bool is_connected(const Topology& t) {
    if (t.node_count() == 0)
        return true;
    const auto hops = bfs_hops(t, 0);
    return std::none_of(hops.begin(), hops.end(),
                        [](std::int32_t h) { return h == kUnreachable; });
}

HopMatrix all_pairs_shortest_hops(const Topology& t) {
    const std::size_t n = t.node_count();
    HopMatrix m(n);
    for (NodeId u = 0; u < n; ++u) {
        const auto hops = bfs_hops(t, u);
        for (NodeId v = 0; v < n; ++v)
            m.at(u, v) = hops[v];
    }
    return m;
}

namespace {

std::string format_range(double range) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), range);
    if (ec != std::errc{})
        throw std::runtime_error("save_scenario: cannot format radio range");
    return std::string(buf, ptr);
}

} // namespace

void save_scenario(const Topology& t, std::ostream& out) {
    out << t.node_count() << ' ' << format_range(t.radio_range) << '\n';
    char line[96];
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        std::snprintf(line, sizeof(line), "%zu %.6f %.6f\n", i, t.positions[i].x,
                      t.positions[i].y);
        out << line;
    }
    if (!out)
        throw std::runtime_error("save_scenario: write failed");
}

void save_scenario(const Topology& t, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("save_scenario: cannot open " + path);
    save_scenario(t, out);
}

Topology load_scenario(std::istream& in) {
    std::size_t n = 0;
    double range = 0.0;
    if (!(in >> n >> range))
        throw std::runtime_error("load_scenario: malformed header line");
    std::vector<Position> positions(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t id = 0;
        Position p;
        if (!(in >> id >> p.x >> p.y))
            throw std::runtime_error("load_scenario: malformed node line " + std::to_string(i));
        if (id != i)
            throw std::runtime_error("load_scenario: node ids must be dense and ascending");
        positions[i] = p;
    }
    return build_topology(std::move(positions), range);
}

Topology load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_scenario: cannot open " + path);
    return load_scenario(in);
}

} // namespace spanpath
