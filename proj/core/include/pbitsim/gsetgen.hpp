#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pbitsim/gset.hpp"

namespace pbitsim {

// Deterministic stand-in instances for the benchmark registry, used when
// the published G-set files are not on disk. Each twin matches its entry's
// vertex count, edge count, weight signing, and structure class (random,
// toroidal grid, or union of two planar triangulations), so it exercises
// the same dynamics; it is not the published graph, and the registry target
// is the published best-known value, not the twin's optimum.
WeightedGraph generate_twin(const BenchmarkEntry& entry);

// Serializes in the standard text format: "N M" header, then 1-based
// "i j w" lines sorted by (i, j).
void write_gset(const WeightedGraph& graph, std::ostream& out);

// Writes "<dir>/<name>" for each requested registry entry (all of them by
// default), creating the directory if needed. Existing files are replaced.
void generate_twin_files(const std::string& dir,
                         const std::vector<std::string>& names = {});

} // namespace pbitsim
