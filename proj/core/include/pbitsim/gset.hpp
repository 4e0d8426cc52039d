#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbitsim/ising.hpp"

namespace pbitsim {

struct Edge {
    std::uint32_t u; // u < v, 0-based
    std::uint32_t v;
    std::int32_t w;
};

struct WeightedGraph {
    std::uint32_t n = 0;
    std::vector<Edge> edges;

    std::int64_t total_weight() const;
};

// One row of the benchmark table: instance name, size, and the best-known
// cut value the normalized-cut metric divides by.
struct BenchmarkEntry {
    std::string name;
    std::uint32_t n;
    std::uint32_t m;
    std::int64_t target;
};

// Parses the standard G-set text format: a header line "N M" followed by M
// lines "i j w" with 1-based vertex indices. LF and CRLF both accepted.
// Throws std::runtime_error naming the offending line on malformed input,
// out-of-range indices, self-loops, duplicate pairs, or an edge-count
// mismatch with the header.
WeightedGraph parse_gset(std::istream& in);
WeightedGraph parse_gset_file(const std::string& path);

// MaxCut -> Ising reduction: J_ij = -w_ij, h = 0. With that sign convention
// cut(s) = (total_weight - H(s)) / 2.
IsingModel to_ising(const WeightedGraph& graph);

std::int64_t cut_value(const WeightedGraph& graph, std::span<const spin_t> spins);
std::int64_t cut_value(const WeightedGraph& graph, const SpinState& state);

// cut / best-known target; deliberately not clamped at 1.0
double normalized_cut(std::int64_t cut, const BenchmarkEntry& entry);

// The ten benchmark instances, in numeric order G1 .. G47.
const std::vector<BenchmarkEntry>& registry();

// nullptr when the name is not in the registry
const BenchmarkEntry* find_entry(std::string_view name);

// Loads "<dir>/<name>" (or "<dir>/<name>.txt") and validates the parsed
// (n, m) against the registry entry.
WeightedGraph load_instance(const std::string& name, const std::string& dir);

} // namespace pbitsim
