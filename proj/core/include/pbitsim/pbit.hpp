#pragma once

#include <algorithm>
#include <cmath>

#include "pbitsim/ising.hpp"

namespace pbitsim {

// Stochastic sign update of a single p-bit: with u uniform on [-1,1] the
// result is +1 with probability (1 + tanh(i0*field))/2. The gain product is
// clamped to +-30 before tanh; tanh(30) is 1 to double precision so the
// probability is unchanged while overflow is impossible.
inline spin_t pbit_sample(double field, double i0, double u) {
    const double x = std::clamp(i0 * field, -30.0, 30.0);
    return (u + std::tanh(x)) >= 0.0 ? spin_t{1} : spin_t{-1};
}

} // namespace pbitsim
