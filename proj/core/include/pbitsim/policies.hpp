#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pbitsim/ising.hpp"
#include "pbitsim/quantizer.hpp"
#include "pbitsim/rng.hpp"

namespace pbitsim {

enum class Policy {
    Gillespie,
    TickRandom,
    TickBlockRandom,
    TickBlockRandomStride,
    TickSequential,
};

// Exact strings used on the CLI and in CSV output.
std::string_view policy_name(Policy policy);
std::optional<Policy> parse_policy(std::string_view name);

// Every policy except Gillespie runs on a global tick clock.
inline bool is_synchronous(Policy p) { return p != Policy::Gillespie; }

// Tick policies with delayed applies (everything synchronous except the
// in-place sequential baseline).
inline bool is_tick_delayed(Policy p) {
    return p == Policy::TickRandom || p == Policy::TickBlockRandom ||
           p == Policy::TickBlockRandomStride;
}

// Spins chosen to sample during one tick. Indices are unique; for the block
// policies the count is exactly ceil(n/c).
struct TickSelection {
    double tick_time_ns = 0.0;
    std::vector<std::uint32_t> indices;
};

std::uint32_t block_length(std::uint32_t n, double c); // ceil(n/c)

// Deterministic index expansions, separated from the random draws so the
// arithmetic is testable on its own.
std::vector<std::uint32_t> block_indices(std::uint32_t n, std::uint32_t len,
                                         std::uint32_t start);
std::vector<std::uint32_t> stride_indices(std::uint32_t n, std::uint32_t len,
                                          std::uint32_t start, std::uint32_t stride);

// Uniform on [1, n-1], redrawn until coprime with n (at most 64 redraws,
// then falls back to 1, which is always coprime).
std::uint32_t draw_stride(std::uint32_t n, Rng& rng);

// Independent Bernoulli mask with inclusion probability 1/c; one draw per
// spin in ascending index order.
TickSelection tick_random_select(std::uint32_t n, double c, double tick_time_ns,
                                 Rng& rng);

// Contiguous block of ceil(n/c) spins starting at a uniform position,
// wrapping mod n. One draw (the start).
TickSelection tick_block_select(std::uint32_t n, double c, double tick_time_ns,
                                Rng& rng);

// Block of ceil(n/c) spins at positions (start + j*stride) mod n with the
// stride coprime to n, so the indices are distinct. Draws: start, then the
// stride rejections.
TickSelection tick_block_stride_select(std::uint32_t n, double c,
                                       double tick_time_ns, Rng& rng);

struct GillespieEvent {
    double wait_ns;
    std::uint32_t spin;
};

// Continuous-time event source: the network of n spins, each updating at
// rate 1/(tau*c), fires as a Poisson process with total rate n/(tau*c); the
// firing spin is uniform. Draw order per event: waiting time, then spin.
class GillespieStepper {
public:
    GillespieStepper(std::uint32_t n, double tau_ns, double c);

    double total_rate() const { return total_rate_; }

    GillespieEvent next(Rng& rng) {
        const double wait = rng.exponential(total_rate_);
        return {wait, static_cast<std::uint32_t>(rng.uniform_index(n_))};
    }

private:
    std::uint32_t n_;
    double total_rate_;
};

// One in-place Gibbs sweep over all spins in ascending index order. Each
// update is immediately visible to the next spin's field; there is no apply
// delay. One uniform draw per spin. When energy_acc is non-null it is kept
// in sync with the flips so callers can trace energy without recomputing.
void sequential_sweep(const IsingModel& model, std::vector<spin_t>& values,
                      double i0, const Quantizer& quantizer, Rng& rng,
                      double* energy_acc = nullptr);

} // namespace pbitsim
