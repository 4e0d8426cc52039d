#include "pbitsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pbitsim {

double oscillation_score(std::span<const TracePoint> trace, double window_fraction) {
    if (!(window_fraction > 0.0) || window_fraction > 1.0) {
        throw std::invalid_argument("oscillation_score: window fraction in (0,1]");
    }
    const auto window = static_cast<std::size_t>(
        std::ceil(window_fraction * static_cast<double>(trace.size())));
    if (window < 10) {
        throw std::invalid_argument("oscillation_score: trace too short, need >= 10 "
                                    "points in the window");
    }
    const auto tail = trace.subspan(trace.size() - window);
    double mean = 0.0;
    for (const auto& p : tail) mean += p.energy;
    mean /= static_cast<double>(window);
    double var = 0.0;
    for (const auto& p : tail) {
        const double d = p.energy - mean;
        var += d * d;
    }
    return std::sqrt(var / static_cast<double>(window));
}

double aggregate_mean_cut(const std::vector<std::vector<double>>& per_instance_cuts) {
    if (per_instance_cuts.empty()) {
        throw std::invalid_argument("aggregate_mean_cut: no instances");
    }
    const std::size_t repeats = per_instance_cuts.front().size();
    if (repeats == 0) {
        throw std::invalid_argument("aggregate_mean_cut: empty repeat list");
    }
    double total = 0.0;
    for (const auto& cuts : per_instance_cuts) {
        if (cuts.size() != repeats) {
            throw std::invalid_argument("aggregate_mean_cut: unequal repeat counts");
        }
        double mean = 0.0;
        for (double c : cuts) mean += c;
        total += mean / static_cast<double>(repeats);
    }
    return total / static_cast<double>(per_instance_cuts.size());
}

std::vector<LandscapeBin> landscape_bins(std::span<const CostPoint> points,
                                         int n_bins) {
    if (points.empty()) {
        throw std::invalid_argument("landscape_bins: no points");
    }
    if (n_bins < 1) {
        throw std::invalid_argument("landscape_bins: need at least one bin");
    }
    double lo = points.front().cost_norm;
    double hi = lo;
    for (const auto& p : points) {
        lo = std::min(lo, p.cost_norm);
        hi = std::max(hi, p.cost_norm);
    }

    std::vector<std::vector<double>> buckets(static_cast<std::size_t>(n_bins));
    const double width = (hi - lo) / n_bins;
    for (const auto& p : points) {
        std::size_t idx = 0;
        if (width > 0.0) {
            idx = std::min<std::size_t>(
                static_cast<std::size_t>((p.cost_norm - lo) / width),
                static_cast<std::size_t>(n_bins - 1));
        }
        buckets[idx].push_back(p.cut_norm);
    }

    std::vector<LandscapeBin> bins;
    for (std::size_t b = 0; b < buckets.size(); ++b) {
        auto& cuts = buckets[b];
        if (cuts.empty()) continue;
        std::sort(cuts.begin(), cuts.end());
        const std::size_t mid = cuts.size() / 2;
        const double median = (cuts.size() % 2 == 1)
                                  ? cuts[mid]
                                  : 0.5 * (cuts[mid - 1] + cuts[mid]);
        const double center =
            width > 0.0 ? lo + (static_cast<double>(b) + 0.5) * width : lo;
        bins.push_back({center, median, cuts.back()});
    }
    return bins;
}

} // namespace pbitsim
