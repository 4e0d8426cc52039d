#include "pbitsim/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace pbitsim {

MaxCutResult brute_force_maxcut(const WeightedGraph& graph) {
    const std::uint32_t n = graph.n;
    if (n == 0 || n > 24) {
        throw std::invalid_argument("brute_force_maxcut: need 1 <= n <= 24");
    }

    // weighted adjacency for O(deg) cut deltas
    std::vector<std::vector<std::pair<std::uint32_t, std::int32_t>>> adj(n);
    for (const auto& e : graph.edges) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }

    std::vector<spin_t> spins(n, spin_t{1});
    std::int64_t cut = 0; // all spins equal -> empty cut
    MaxCutResult best{cut, spins};

    const std::uint64_t states = n == 1 ? 1 : (std::uint64_t{1} << (n - 1));
    for (std::uint64_t k = 1; k < states; ++k) {
        // Gray code: state k differs from k-1 in bit ctz(k); spin 0 stays fixed.
        const auto flip = static_cast<std::uint32_t>(std::countr_zero(k)) + 1;
        std::int64_t delta = 0;
        for (const auto& [nb, w] : adj[flip]) {
            delta += static_cast<std::int64_t>(w) * spins[flip] * spins[nb];
        }
        cut += delta;
        spins[flip] = static_cast<spin_t>(-spins[flip]);
        if (cut > best.best_cut) {
            best.best_cut = cut;
            best.witness = spins;
        }
    }
    return best;
}

std::vector<double> brute_force_boltzmann(const IsingModel& model, double i0) {
    const std::uint32_t n = model.n();
    if (n > 20) {
        throw std::invalid_argument("brute_force_boltzmann: need n <= 20");
    }
    const std::size_t states = std::size_t{1} << n;
    std::vector<double> log_w(states);
    std::vector<spin_t> spins(n);
    double log_max = -std::numeric_limits<double>::infinity();
    for (std::size_t mask = 0; mask < states; ++mask) {
        for (std::uint32_t i = 0; i < n; ++i) {
            spins[i] = (mask >> i) & 1 ? spin_t{1} : spin_t{-1};
        }
        log_w[mask] = -i0 * energy(model, spins);
        log_max = std::max(log_max, log_w[mask]);
    }
    double norm = 0.0;
    for (auto& lw : log_w) {
        lw = std::exp(lw - log_max);
        norm += lw;
    }
    for (auto& w : log_w) w /= norm;
    return log_w;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("total_variation: size mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += std::abs(p[i] - q[i]);
    }
    return 0.5 * acc;
}

} // namespace pbitsim
