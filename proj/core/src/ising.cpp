#include "pbitsim/ising.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace pbitsim {

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

IsingModel::IsingModel(std::uint32_t n, const std::vector<CouplingSpec>& couplings,
                       std::vector<double> biases)
    : n_(n) {
    if (n == 0) {
        throw std::invalid_argument("IsingModel: n must be >= 1");
    }
    if (biases.empty()) {
        biases.assign(n, 0.0);
    } else if (biases.size() != n) {
        throw std::invalid_argument("IsingModel: bias vector length mismatch");
    }
    biases_ = std::move(biases);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(couplings.size() * 2);
    std::vector<std::size_t> degree(n, 0);
    for (const auto& c : couplings) {
        if (c.i >= n || c.j >= n) {
            throw std::invalid_argument("IsingModel: coupling index out of range");
        }
        if (c.i == c.j) {
            throw std::invalid_argument("IsingModel: diagonal coupling J_ii not allowed");
        }
        if (!seen.insert(pair_key(c.i, c.j)).second) {
            throw std::invalid_argument("IsingModel: duplicate coupling pair");
        }
        ++degree[c.i];
        ++degree[c.j];
    }
    pair_count_ = couplings.size();

    offsets_.assign(n + 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        offsets_[i + 1] = offsets_[i] + degree[i];
    }
    entries_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& c : couplings) {
        entries_[cursor[c.i]++] = {c.j, c.weight};
        entries_[cursor[c.j]++] = {c.i, c.weight};
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        std::sort(entries_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                  entries_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]),
                  [](const CouplingEntry& a, const CouplingEntry& b) {
                      return a.neighbor < b.neighbor;
                  });
    }

    // variance over the full dense N x N matrix, structural zeros included
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& e : entries_) {
        sum += e.weight;
        sum_sq += e.weight * e.weight;
    }
    const double cells = static_cast<double>(n) * static_cast<double>(n);
    const double mean = sum / cells;
    const double var = std::max(sum_sq / cells - mean * mean, 0.0);
    sigma_ = std::sqrt((static_cast<double>(n) - 1.0) * var);

    for (std::uint32_t i = 0; i < n; ++i) {
        double reach = std::abs(biases_[i]);
        for (const auto& e : row(i)) {
            reach += std::abs(e.weight);
        }
        full_scale_ = std::max(full_scale_, reach);
    }
}

double IsingModel::coupling(std::uint32_t i, std::uint32_t j) const {
    for (const auto& e : row(i)) {
        if (e.neighbor == j) return e.weight;
    }
    return 0.0;
}

double energy(const IsingModel& model, std::span<const spin_t> spins) {
    if (spins.size() != model.n()) {
        throw std::invalid_argument("energy: spin state length " +
                                    std::to_string(spins.size()) +
                                    " != model size " + std::to_string(model.n()));
    }
    double coupling_term = 0.0; // sums each pair twice
    double bias_term = 0.0;
    for (std::uint32_t i = 0; i < model.n(); ++i) {
        const double si = spins[i];
        for (const auto& e : model.row(i)) {
            coupling_term += e.weight * si * spins[e.neighbor];
        }
        bias_term += model.bias(i) * si;
    }
    return -0.5 * coupling_term - bias_term;
}

double energy(const IsingModel& model, const SpinState& state) {
    return energy(model, std::span<const spin_t>(state.values));
}

double local_field(const IsingModel& model, std::span<const spin_t> spins,
                   std::uint32_t i) {
    if (spins.size() != model.n()) {
        throw std::invalid_argument("local_field: spin state length mismatch");
    }
    if (i >= model.n()) {
        throw std::out_of_range("local_field: spin index out of range");
    }
    double field = model.bias(i);
    for (const auto& e : model.row(i)) {
        field += e.weight * spins[e.neighbor];
    }
    return field;
}

double local_field(const IsingModel& model, const SpinState& state,
                   std::uint32_t i) {
    return local_field(model, std::span<const spin_t>(state.values), i);
}

double coupling_sigma(const IsingModel& model) {
    if (model.n() < 2) {
        throw std::invalid_argument("coupling_sigma: model must have n >= 2");
    }
    if (model.sigma_or_zero() == 0.0) {
        throw std::runtime_error("coupling_sigma: degenerate model, all couplings zero");
    }
    return model.sigma_or_zero();
}

} // namespace pbitsim
