#include "pbitsim/gsetgen.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "pbitsim/rng.hpp"

namespace pbitsim {

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint64_t name_seed(const std::string& name) {
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

struct EdgeSet {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

    bool add(std::uint32_t a, std::uint32_t b) {
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        if (!seen.insert(pair_key(a, b)).second) return false;
        pairs.emplace_back(a, b);
        return true;
    }
};

void add_random_pairs(EdgeSet& set, std::uint32_t n, std::size_t target, Rng& rng) {
    while (set.pairs.size() < target) {
        const auto a = static_cast<std::uint32_t>(rng.uniform_index(n));
        const auto b = static_cast<std::uint32_t>(rng.uniform_index(n));
        set.add(a, b);
    }
}

void remove_random_pairs(EdgeSet& set, std::size_t target, Rng& rng) {
    while (set.pairs.size() > target) {
        const auto idx =
            static_cast<std::size_t>(rng.uniform_index(set.pairs.size()));
        set.seen.erase(pair_key(set.pairs[idx].first, set.pairs[idx].second));
        set.pairs[idx] = set.pairs.back();
        set.pairs.pop_back();
    }
}

// Erdos-Renyi with an exact edge count.
EdgeSet topology_random(std::uint32_t n, std::size_t m, Rng& rng) {
    EdgeSet set;
    add_random_pairs(set, n, m, rng);
    return set;
}

// 2D torus, wrap in both directions: exactly 2 * rows * cols edges.
EdgeSet topology_torus(std::uint32_t rows, std::uint32_t cols) {
    EdgeSet set;
    for (std::uint32_t r = 0; r < rows; ++r) {
        for (std::uint32_t c = 0; c < cols; ++c) {
            const std::uint32_t v = r * cols + c;
            set.add(v, r * cols + (c + 1) % cols);
            set.add(v, ((r + 1) % rows) * cols + c);
        }
    }
    return set;
}

// Union of two triangulated grids over independently relabeled vertices,
// then trimmed or padded to the exact edge count. Each layer is planar;
// the union has roughly 6 edges per vertex, like the planar benchmark
// instances.
EdgeSet topology_planar_union(std::uint32_t rows, std::uint32_t cols,
                              std::size_t m, Rng& rng) {
    const std::uint32_t n = rows * cols;
    EdgeSet set;
    for (int layer = 0; layer < 2; ++layer) {
        std::vector<std::uint32_t> label(n);
        for (std::uint32_t v = 0; v < n; ++v) label[v] = v;
        if (layer == 1) {
            for (std::uint32_t v = n - 1; v > 0; --v) { // Fisher-Yates
                const auto w = static_cast<std::uint32_t>(rng.uniform_index(v + 1));
                std::swap(label[v], label[w]);
            }
        }
        for (std::uint32_t r = 0; r < rows; ++r) {
            for (std::uint32_t c = 0; c < cols; ++c) {
                const std::uint32_t v = r * cols + c;
                if (c + 1 < cols) set.add(label[v], label[v + 1]);
                if (r + 1 < rows) set.add(label[v], label[v + cols]);
                if (c + 1 < cols && r + 1 < rows) {
                    // one random diagonal per grid cell keeps the layer planar
                    if (rng.bernoulli(0.5)) {
                        set.add(label[v], label[v + cols + 1]);
                    } else {
                        set.add(label[v + 1], label[v + cols]);
                    }
                }
            }
        }
    }
    remove_random_pairs(set, m, rng);
    add_random_pairs(set, n, m, rng);
    return set;
}

struct TwinRecipe {
    enum class Kind { Random, Torus, PlanarUnion } kind;
    bool signed_weights;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
};

TwinRecipe recipe_for(const std::string& name) {
    if (name == "G1") return {TwinRecipe::Kind::Random, false};
    if (name == "G6") return {TwinRecipe::Kind::Random, true};
    if (name == "G11") return {TwinRecipe::Kind::Torus, true, 20, 40};
    if (name == "G14") return {TwinRecipe::Kind::PlanarUnion, false, 20, 40};
    if (name == "G18") return {TwinRecipe::Kind::PlanarUnion, true, 20, 40};
    if (name == "G22") return {TwinRecipe::Kind::Random, false};
    if (name == "G34") return {TwinRecipe::Kind::Torus, true, 40, 50};
    if (name == "G38") return {TwinRecipe::Kind::PlanarUnion, false, 40, 50};
    if (name == "G39") return {TwinRecipe::Kind::PlanarUnion, true, 40, 50};
    if (name == "G47") return {TwinRecipe::Kind::Random, false};
    throw std::runtime_error("no twin recipe for '" + name + "'");
}

} // namespace

WeightedGraph generate_twin(const BenchmarkEntry& entry) {
    const TwinRecipe recipe = recipe_for(entry.name);
    Rng rng(name_seed(entry.name));

    EdgeSet topology;
    switch (recipe.kind) {
    case TwinRecipe::Kind::Random:
        topology = topology_random(entry.n, entry.m, rng);
        break;
    case TwinRecipe::Kind::Torus:
        topology = topology_torus(recipe.rows, recipe.cols);
        break;
    case TwinRecipe::Kind::PlanarUnion:
        topology = topology_planar_union(recipe.rows, recipe.cols, entry.m, rng);
        break;
    }
    if (topology.pairs.size() != entry.m) {
        throw std::logic_error("twin generator produced wrong edge count for " +
                               entry.name);
    }

    // weights drawn in sorted edge order so the file is reproducible
    std::sort(topology.pairs.begin(), topology.pairs.end());
    WeightedGraph graph;
    graph.n = entry.n;
    graph.edges.reserve(entry.m);
    for (const auto& [a, b] : topology.pairs) {
        const std::int32_t w =
            recipe.signed_weights ? (rng.bernoulli(0.5) ? 1 : -1) : 1;
        graph.edges.push_back({a, b, w});
    }
    return graph;
}

void write_gset(const WeightedGraph& graph, std::ostream& out) {
    out << graph.n << ' ' << graph.edges.size() << '\n';
    for (const auto& e : graph.edges) {
        out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << e.w << '\n';
    }
}

void generate_twin_files(const std::string& dir,
                         const std::vector<std::string>& names) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> wanted = names;
    if (wanted.empty()) {
        for (const auto& e : registry()) wanted.push_back(e.name);
    }
    for (const auto& name : wanted) {
        const BenchmarkEntry* entry = find_entry(name);
        if (!entry) {
            throw std::runtime_error("unknown benchmark '" + name + "'");
        }
        const WeightedGraph graph = generate_twin(*entry);
        std::ofstream out(dir + "/" + name);
        if (!out) {
            throw std::runtime_error("cannot write " + dir + "/" + name);
        }
        write_gset(graph, out);
    }
}

} // namespace pbitsim
