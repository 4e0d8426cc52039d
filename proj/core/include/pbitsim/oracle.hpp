#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbitsim/gset.hpp"
#include "pbitsim/ising.hpp"

namespace pbitsim {

struct MaxCutResult {
    std::int64_t best_cut;
    std::vector<spin_t> witness;
};

// Exhaustive MaxCut over 2^(n-1) states (spin 0 is fixed by the global flip
// symmetry), walking a Gray code so each step is an O(deg) cut update.
// Limited to n <= 24.
MaxCutResult brute_force_maxcut(const WeightedGraph& graph);

// Exact stationary distribution of single-site dynamics whose conditional
// is P(s_i = +1 | rest) = (1 + tanh(i0 * s_i_field))/2. Detailed balance:
// the conditional odds are e^{2 i0 field}, and flipping spin i changes H by
// -2 * field, so the stationary law is P(s) proportional to exp(-i0 H(s)).
// Index convention: bit i of the state index set means s_i = +1. Limited to
// n <= 20.
std::vector<double> brute_force_boltzmann(const IsingModel& model, double i0);

// 0.5 * sum |p_i - q_i|
double total_variation(std::span<const double> p, std::span<const double> q);

} // namespace pbitsim
