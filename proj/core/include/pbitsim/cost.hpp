#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pbitsim {

// Abstract hardware cost: physical p-bits plus input DACs, weighted by
// alpha and beta. One DAC per physical p-bit; DAC resolution is normalized
// by b_ref = 12 bits.
struct CostParams {
    double alpha = 1.0;
    double beta = 1.0;
    static constexpr int b_ref = 12;
};

// ceil(n/c) physical p-bits when one physical p-bit serves c logical spins.
inline std::uint64_t physical_pbits(std::uint64_t n, double c) {
    if (!(c >= 1.0)) throw std::invalid_argument("physical_pbits: c must be >= 1");
    return static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) / c));
}

inline double hw_cost(std::uint64_t n, double c, int bits, CostParams params = {}) {
    if (bits < 1 || bits > CostParams::b_ref) {
        throw std::invalid_argument("hw_cost: bits must be in [1,12]");
    }
    if (!(params.alpha > 0.0) || !(params.beta > 0.0)) {
        throw std::invalid_argument("hw_cost: weights must be positive");
    }
    const auto pbits = static_cast<double>(physical_pbits(n, c));
    const double b_norm = static_cast<double>(bits) / CostParams::b_ref;
    return params.alpha * pbits + params.beta * b_norm * pbits;
}

// Cost relative to the dedicated full-resolution design (c = 1, b = 12)
// with equal weights, i.e. (ceil(n/c)/n) * (1 + b/12) / 2.
inline double normalized_cost(std::uint64_t n, double c, int bits) {
    return hw_cost(n, c, bits) / hw_cost(n, 1.0, CostParams::b_ref);
}

// Staleness severity of delayed updates.
inline double d_tau_ratio(double d_ns, double tau_ns) {
    if (!(tau_ns > 0.0)) throw std::invalid_argument("d_tau_ratio: tau must be > 0");
    return d_ns / tau_ns;
}

} // namespace pbitsim
