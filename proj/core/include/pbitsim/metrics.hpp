#pragma once

#include <span>
#include <vector>

#include "pbitsim/engine.hpp"
#include "pbitsim/policies.hpp"

namespace pbitsim {

// One sweep outcome placed on the performance-cost landscape.
struct CostPoint {
    double cost_norm;
    double cut_norm;
    Policy policy = Policy::TickRandom;
    double tau_ns = 0.0;
    double c = 1.0;
    int bits = 12;
};

struct LandscapeBin {
    double bin_center_cost;
    double median_cut_norm;
    double max_cut_norm;
};

// Population standard deviation of the energy over the final
// window_fraction of the trace points. A flat tail scores 0; synchronized
// collective switching shows up as a large score.
double oscillation_score(std::span<const TracePoint> trace,
                         double window_fraction = 0.5);

// Mean-of-means: average the repeats within each instance, then average the
// instances with equal weight. Every instance must have the same number of
// repeats.
double aggregate_mean_cut(const std::vector<std::vector<double>>& per_instance_cuts);

// Equal-width binning over [min cost, max cost]; empty bins are omitted.
// Median uses the midpoint convention for even counts.
std::vector<LandscapeBin> landscape_bins(std::span<const CostPoint> points,
                                         int n_bins = 40);

} // namespace pbitsim
