#pragma once

#include <algorithm>
#include <stdexcept>

#include "pbitsim/ising.hpp"

namespace pbitsim {

// Linear ramp of the annealing gain i0 (a pseudo inverse temperature) from
// i0_min at t = 0 to i0_max at t = t_total.
class AnnealSchedule {
public:
    AnnealSchedule(double i0_min, double i0_max, double t_total_ns)
        : i0_min_(i0_min), i0_max_(i0_max), t_total_ns_(t_total_ns) {
        if (!(i0_min > 0.0) || !(i0_max >= i0_min)) {
            throw std::invalid_argument("AnnealSchedule: need 0 < i0_min <= i0_max");
        }
        if (!(t_total_ns > 0.0)) {
            throw std::invalid_argument("AnnealSchedule: t_total must be > 0");
        }
    }

    // Out-of-range t is clamped; *clamped reports that it happened. Callers
    // at the exact boundaries are legal and do not set the flag.
    double i0_at(double t_ns, bool* clamped = nullptr) const {
        if (clamped) *clamped = (t_ns < 0.0 || t_ns > t_total_ns_);
        const double t = std::clamp(t_ns, 0.0, t_total_ns_);
        return i0_min_ + (i0_max_ - i0_min_) * (t / t_total_ns_);
    }

    double i0_min() const { return i0_min_; }
    double i0_max() const { return i0_max_; }
    double t_total_ns() const { return t_total_ns_; }

    // Default bounds 0.1/sigma .. 10/sigma, normalized by the model's
    // coupling scale.
    static AnnealSchedule for_model(const IsingModel& model, double t_total_ns) {
        const double sigma = coupling_sigma(model);
        return AnnealSchedule(0.1 / sigma, 10.0 / sigma, t_total_ns);
    }

private:
    double i0_min_;
    double i0_max_;
    double t_total_ns_;
};

} // namespace pbitsim
