#include "pbitsim/gset.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace pbitsim {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("gset parse error at line " + std::to_string(line_no) +
                             ": " + what);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

std::int64_t WeightedGraph::total_weight() const {
    std::int64_t w = 0;
    for (const auto& e : edges) w += e.w;
    return w;
}

WeightedGraph parse_gset(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    long long n = 0;
    long long m = 0;
    bool have_header = false;
    while (!have_header) {
        if (!std::getline(in, line)) {
            parse_fail(line_no + 1, "missing header");
        }
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;
        char extra;
        if (std::sscanf(line.c_str(), "%lld %lld %c", &n, &m, &extra) != 2) {
            parse_fail(line_no, "malformed header, expected 'N M'");
        }
        if (n < 1 || m < 0) {
            parse_fail(line_no, "header values out of range");
        }
        have_header = true;
    }

    WeightedGraph graph;
    graph.n = static_cast<std::uint32_t>(n);
    graph.edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;
        if (graph.edges.size() == static_cast<std::size_t>(m)) {
            parse_fail(line_no, "more edge lines than the header's M");
        }
        long long i = 0, j = 0, w = 0;
        char extra;
        if (std::sscanf(line.c_str(), "%lld %lld %lld %c", &i, &j, &w, &extra) != 3) {
            parse_fail(line_no, "malformed edge, expected 'i j w'");
        }
        if (i < 1 || i > n || j < 1 || j > n) {
            parse_fail(line_no, "vertex index outside [1," + std::to_string(n) + "]");
        }
        if (i == j) {
            parse_fail(line_no, "self-loop");
        }
        auto a = static_cast<std::uint32_t>(std::min(i, j) - 1);
        auto b = static_cast<std::uint32_t>(std::max(i, j) - 1);
        if (!seen.insert(pair_key(a, b)).second) {
            parse_fail(line_no, "duplicate edge (including symmetric duplicates)");
        }
        graph.edges.push_back({a, b, static_cast<std::int32_t>(w)});
    }

    if (graph.edges.size() != static_cast<std::size_t>(m)) {
        throw std::runtime_error("gset parse error: header declares " + std::to_string(m) +
                                 " edges, file has " + std::to_string(graph.edges.size()));
    }
    return graph;
}

WeightedGraph parse_gset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph file: " + path);
    }
    return parse_gset(in);
}

IsingModel to_ising(const WeightedGraph& graph) {
    std::vector<CouplingSpec> couplings;
    couplings.reserve(graph.edges.size());
    for (const auto& e : graph.edges) {
        couplings.push_back({e.u, e.v, -static_cast<double>(e.w)});
    }
    return IsingModel(graph.n, couplings);
}

std::int64_t cut_value(const WeightedGraph& graph, std::span<const spin_t> spins) {
    if (spins.size() != graph.n) {
        throw std::invalid_argument("cut_value: spin state length mismatch");
    }
    std::int64_t cut = 0;
    for (const auto& e : graph.edges) {
        if (spins[e.u] != spins[e.v]) cut += e.w;
    }
    return cut;
}

std::int64_t cut_value(const WeightedGraph& graph, const SpinState& state) {
    return cut_value(graph, std::span<const spin_t>(state.values));
}

double normalized_cut(std::int64_t cut, const BenchmarkEntry& entry) {
    if (entry.target <= 0) {
        throw std::invalid_argument("normalized_cut: target must be positive");
    }
    return static_cast<double>(cut) / static_cast<double>(entry.target);
}

const std::vector<BenchmarkEntry>& registry() {
    static const std::vector<BenchmarkEntry> entries = {
        {"G1", 800, 19176, 11624},  {"G6", 800, 19176, 2178},
        {"G11", 800, 1600, 564},    {"G14", 800, 4694, 3064},
        {"G18", 800, 4694, 992},    {"G22", 2000, 19990, 13359},
        {"G34", 2000, 4000, 1384},  {"G38", 2000, 11779, 7688},
        {"G39", 2000, 11778, 2408}, {"G47", 1000, 9990, 6657},
    };
    return entries;
}

const BenchmarkEntry* find_entry(std::string_view name) {
    for (const auto& e : registry()) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

WeightedGraph load_instance(const std::string& name, const std::string& dir) {
    const BenchmarkEntry* entry = find_entry(name);
    if (!entry) {
        throw std::runtime_error("unknown benchmark '" + name + "'");
    }
    std::string path = dir.empty() ? name : dir + "/" + name;
    std::ifstream probe(path);
    if (!probe) {
        path += ".txt";
    }
    WeightedGraph graph = parse_gset_file(path);
    if (graph.n != entry->n || graph.edges.size() != entry->m) {
        throw std::runtime_error("graph file " + path + " has (n=" +
                                 std::to_string(graph.n) + ", m=" +
                                 std::to_string(graph.edges.size()) +
                                 ") but registry expects (n=" + std::to_string(entry->n) +
                                 ", m=" + std::to_string(entry->m) + ")");
    }
    return graph;
}

} // namespace pbitsim
