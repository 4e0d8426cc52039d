#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pbitsim {

// Symmetric mid-rise uniform quantizer modeling a b-bit input DAC with a
// single global full scale S. The 2^b output levels sit at (k + 1/2) * step
// for k in [-2^(b-1), 2^(b-1)); there is no zero level, inputs saturate at
// +-(S - step/2).
class Quantizer {
public:
    static constexpr int kMaxBits = 12;

    Quantizer(int bits, double full_scale) : bits_(bits), full_scale_(full_scale) {
        if (bits < 1 || bits > kMaxBits) {
            throw std::invalid_argument("Quantizer: bits must be in [1,12]");
        }
        if (!(full_scale > 0.0)) {
            throw std::invalid_argument("Quantizer: full scale must be > 0");
        }
        step_ = 2.0 * full_scale / static_cast<double>(1 << bits);
    }

    double operator()(double field) const {
        const double level = (std::floor(field / step_) + 0.5) * step_;
        const double top = full_scale_ - 0.5 * step_;
        return std::clamp(level, -top, top);
    }

    int bits() const { return bits_; }
    double full_scale() const { return full_scale_; }
    double step() const { return step_; }

private:
    int bits_;
    double full_scale_;
    double step_;
};

} // namespace pbitsim
