#pragma once

// Shared fixtures for the test suites: small random graphs/models and
// helpers for driving the engine.

#include <cstdint>
#include <vector>

#include "pbitsim/gset.hpp"
#include "pbitsim/ising.hpp"
#include "pbitsim/rng.hpp"

namespace testutil {

// Random graph with edge probability p and weights in {-1, +1} (or all +1).
inline pbitsim::WeightedGraph random_graph(std::uint32_t n, double edge_prob,
                                           bool signed_weights, pbitsim::Rng& rng) {
    pbitsim::WeightedGraph g;
    g.n = n;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (rng.uniform01() < edge_prob) {
                const std::int32_t w =
                    signed_weights ? (rng.bernoulli(0.5) ? 1 : -1) : 1;
                g.edges.push_back({i, j, w});
            }
        }
    }
    return g;
}

// Random Ising model with couplings uniform in [-1,1] and small biases.
inline pbitsim::IsingModel random_model(std::uint32_t n, double edge_prob,
                                        pbitsim::Rng& rng, bool with_bias = false) {
    std::vector<pbitsim::CouplingSpec> couplings;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (rng.uniform01() < edge_prob) {
                couplings.push_back({i, j, rng.uniform_pm1()});
            }
        }
    }
    if (couplings.empty()) couplings.push_back({0, 1, 1.0});
    std::vector<double> biases;
    if (with_bias) {
        biases.resize(n);
        for (auto& b : biases) b = 0.25 * rng.uniform_pm1();
    }
    return pbitsim::IsingModel(n, couplings, biases);
}

inline std::vector<pbitsim::spin_t> random_spins(std::uint32_t n, pbitsim::Rng& rng) {
    std::vector<pbitsim::spin_t> s(n);
    for (auto& v : s) v = rng.bernoulli(0.5) ? pbitsim::spin_t{1} : pbitsim::spin_t{-1};
    return s;
}

// State index with bit i set meaning spin i is +1; matches the oracle.
inline std::size_t state_index(const std::vector<pbitsim::spin_t>& spins) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < spins.size(); ++i) {
        if (spins[i] > 0) mask |= std::size_t{1} << i;
    }
    return mask;
}

} // namespace testutil
