#include "pbitsim/policies.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pbitsim/pbit.hpp"

namespace pbitsim {

std::string_view policy_name(Policy policy) {
    switch (policy) {
    case Policy::Gillespie: return "gillespie";
    case Policy::TickRandom: return "tick-random";
    case Policy::TickBlockRandom: return "tick-block-random";
    case Policy::TickBlockRandomStride: return "tick-block-random-stride";
    case Policy::TickSequential: return "tick-sequential";
    }
    return "?";
}

std::optional<Policy> parse_policy(std::string_view name) {
    for (Policy p : {Policy::Gillespie, Policy::TickRandom, Policy::TickBlockRandom,
                     Policy::TickBlockRandomStride, Policy::TickSequential}) {
        if (policy_name(p) == name) return p;
    }
    return std::nullopt;
}

std::uint32_t block_length(std::uint32_t n, double c) {
    if (c < 1.0) throw std::invalid_argument("block_length: c must be >= 1");
    const auto len = static_cast<std::uint32_t>(
        std::ceil(static_cast<double>(n) / c));
    return std::min(len, n);
}

std::vector<std::uint32_t> block_indices(std::uint32_t n, std::uint32_t len,
                                         std::uint32_t start) {
    std::vector<std::uint32_t> idx(len);
    for (std::uint32_t j = 0; j < len; ++j) {
        idx[j] = (start + j) % n;
    }
    return idx;
}

std::vector<std::uint32_t> stride_indices(std::uint32_t n, std::uint32_t len,
                                          std::uint32_t start, std::uint32_t stride) {
    std::vector<std::uint32_t> idx(len);
    std::uint64_t pos = start;
    for (std::uint32_t j = 0; j < len; ++j) {
        idx[j] = static_cast<std::uint32_t>(pos % n);
        pos += stride;
    }
    return idx;
}

std::uint32_t draw_stride(std::uint32_t n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("draw_stride: n must be >= 2");
    for (int attempt = 0; attempt < 64; ++attempt) {
        const auto r = static_cast<std::uint32_t>(1 + rng.uniform_index(n - 1));
        if (std::gcd(r, n) == 1) return r;
    }
    return 1;
}

TickSelection tick_random_select(std::uint32_t n, double c, double tick_time_ns,
                                 Rng& rng) {
    const double p_flip = 1.0 / c;
    TickSelection sel{tick_time_ns, {}};
    sel.indices.reserve(static_cast<std::size_t>(p_flip * n) + 16);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (rng.bernoulli(p_flip)) sel.indices.push_back(i);
    }
    return sel;
}

TickSelection tick_block_select(std::uint32_t n, double c, double tick_time_ns,
                                Rng& rng) {
    const std::uint32_t len = block_length(n, c);
    const auto start = static_cast<std::uint32_t>(rng.uniform_index(n));
    return {tick_time_ns, block_indices(n, len, start)};
}

TickSelection tick_block_stride_select(std::uint32_t n, double c,
                                       double tick_time_ns, Rng& rng) {
    const std::uint32_t len = block_length(n, c);
    const auto start = static_cast<std::uint32_t>(rng.uniform_index(n));
    const std::uint32_t stride = draw_stride(n, rng);
    return {tick_time_ns, stride_indices(n, len, start, stride)};
}

GillespieStepper::GillespieStepper(std::uint32_t n, double tau_ns, double c)
    : n_(n) {
    if (n == 0 || !(tau_ns > 0.0) || !(c >= 1.0)) {
        throw std::invalid_argument("GillespieStepper: need n >= 1, tau > 0, c >= 1");
    }
    total_rate_ = static_cast<double>(n) / (tau_ns * c);
}

void sequential_sweep(const IsingModel& model, std::vector<spin_t>& values,
                      double i0, const Quantizer& quantizer, Rng& rng,
                      double* energy_acc) {
    const std::uint32_t n = model.n();
    if (values.size() != n) {
        throw std::invalid_argument("sequential_sweep: spin state length mismatch");
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        const double field = local_field(model, values, i);
        const double u = rng.uniform_pm1();
        const spin_t next = pbit_sample(quantizer(field), i0, u);
        if (next != values[i]) {
            // flipping spin i changes H by 2 * s_i * field
            if (energy_acc) *energy_acc += 2.0 * values[i] * field;
            values[i] = next;
        }
    }
}

} // namespace pbitsim
