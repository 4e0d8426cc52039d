#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace pbitsim {

// All randomness in the simulator flows through this wrapper. Draws are
// derived from raw mt19937_64 output with fixed arithmetic only, so a seed
// produces the same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform on [0,1), 53-bit resolution
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform on [-1,1)
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

    bool bernoulli(double p) { return uniform01() < p; }

    // uniform integer on [0,n); rejection keeps every residue equally likely
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t max64 = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t rem = (max64 % n + 1) % n; // 2^64 mod n
        std::uint64_t r = next_u64();
        if (rem != 0) {
            const std::uint64_t limit = 0 - rem; // largest multiple of n
            while (r >= limit) {
                r = next_u64();
            }
        }
        return r % n;
    }

    // exponential waiting time, rate in 1/ns
    double exponential(double rate) {
        return -std::log1p(-uniform01()) / rate;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace pbitsim
