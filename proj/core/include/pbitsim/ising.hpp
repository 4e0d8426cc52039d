#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pbitsim {

using spin_t = std::int8_t; // strictly +1 or -1

// Spin configuration together with the simulation clock it was observed at.
struct SpinState {
    std::vector<spin_t> values;
    double clock_ns = 0.0;
};

struct CouplingSpec {
    std::uint32_t i;
    std::uint32_t j;
    double weight;
};

struct CouplingEntry {
    std::uint32_t neighbor;
    double weight;
};

// Ising model H(s) = -1/2 s^T J s - h^T s with sparse symmetric J and zero
// diagonal. The adjacency is stored CSR-style with both directions of each
// pair, so row(i) enumerates every coupling incident to spin i.
class IsingModel {
public:
    IsingModel(std::uint32_t n, const std::vector<CouplingSpec>& couplings,
               std::vector<double> biases = {});

    std::uint32_t n() const { return n_; }
    std::size_t pair_count() const { return pair_count_; }

    std::span<const CouplingEntry> row(std::uint32_t i) const {
        return {entries_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    double bias(std::uint32_t i) const { return biases_[i]; }
    std::span<const double> biases() const { return biases_; }

    // O(deg) lookup; 0 when the pair is not stored
    double coupling(std::uint32_t i, std::uint32_t j) const;

    // sqrt((N-1) * Var(J)) over all N^2 dense entries; 0 when J is all zero
    double sigma_or_zero() const { return sigma_; }

    // max_i (|h_i| + sum_j |J_ij|), the largest magnitude any local field
    // can reach; used as the quantizer full scale
    double field_full_scale() const { return full_scale_; }

private:
    std::uint32_t n_;
    std::vector<std::size_t> offsets_;
    std::vector<CouplingEntry> entries_;
    std::vector<double> biases_;
    std::size_t pair_count_ = 0;
    double sigma_ = 0.0;
    double full_scale_ = 0.0;
};

double energy(const IsingModel& model, std::span<const spin_t> spins);
double energy(const IsingModel& model, const SpinState& state);

double local_field(const IsingModel& model, std::span<const spin_t> spins,
                   std::uint32_t i);
double local_field(const IsingModel& model, const SpinState& state,
                   std::uint32_t i);

// Coupling scale used to normalize annealing gains across instances.
// Throws when the model has no nonzero coupling (the scale would be 0 and
// the default annealing bounds 0.1/sigma, 10/sigma would diverge).
double coupling_sigma(const IsingModel& model);

} // namespace pbitsim
