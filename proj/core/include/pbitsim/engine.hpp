#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbitsim/gset.hpp"
#include "pbitsim/ising.hpp"
#include "pbitsim/policies.hpp"
#include "pbitsim/quantizer.hpp"
#include "pbitsim/rng.hpp"

namespace pbitsim {

// A decided spin value waiting to become visible. apply_at is decision time
// plus the hardware delay d; seq breaks ties between equal timestamps in
// creation order.
struct PendingApply {
    double apply_at_ns;
    std::uint64_t seq;
    std::uint32_t spin;
    spin_t value;
};

// Full operating point of one simulation run.
struct RunConfig {
    Policy policy = Policy::TickRandom;
    double tau_ns = 5.0;     // update interval of a physical p-bit
    double c = 1.0;          // time-multiplexing reuse factor, >= 1
    int bits = 12;           // DAC resolution
    double d_ns = 5.0;       // apply delay (ignored by tick-sequential)
    double t_total_ns = 500.0;
    std::uint64_t seed = 0;
    std::size_t sample_cap = 2000; // max energy-trace points kept
    // Annealing bounds; when unset they default to 0.1/sigma and 10/sigma.
    // Setting both to the same value disables the ramp.
    std::optional<double> i0_min;
    std::optional<double> i0_max;
    bool record_apply_log = false; // keep the landed-apply log in the result

    void validate() const; // throws std::invalid_argument
};

struct TracePoint {
    double t_ns;
    double energy;
};

struct RunResult {
    std::string graph;
    RunConfig config;
    std::int64_t final_cut = 0;
    double normalized_cut = 0.0;
    double final_energy = 0.0; // recomputed from the final state, not accumulated
    std::vector<TracePoint> energy_trace;
    std::uint64_t applied_updates = 0;
    std::vector<spin_t> final_spins;
    std::vector<PendingApply> apply_log; // in land order; only when requested
};

// Effective per-spin update rate 1/(tau*c) in 1/ns.
double spin_rate(double tau_ns, double c);

// Spin buffer with delayed visibility. schedule() enqueues a write;
// advance_to(t) lands every pending write with apply_at <= t in
// (apply_at, seq) order, so at equal timestamps applies precede reads and
// the newest write to a spin wins.
class DelayedApplyQueue {
public:
    explicit DelayedApplyQueue(std::vector<spin_t> initial)
        : values_(std::move(initial)) {}

    void schedule(std::uint32_t spin, spin_t value, double apply_at_ns) {
        heap_.push({apply_at_ns, next_seq_++, spin, value});
    }

    // Pops the next due entry without writing it; the caller must follow up
    // with write(). Splitting the two lets the engine compute the energy
    // delta from the pre-write state.
    std::optional<PendingApply> pop_due(double t_ns) {
        if (heap_.empty() || heap_.top().apply_at_ns > t_ns) return std::nullopt;
        PendingApply next = heap_.top();
        heap_.pop();
        return next;
    }

    void write(const PendingApply& apply) {
        values_[apply.spin] = apply.value;
        ++applied_count_;
    }

    void advance_to(double t_ns) {
        while (auto next = pop_due(t_ns)) {
            write(*next);
        }
    }

    std::span<const spin_t> values() const { return values_; }
    std::uint64_t applied_count() const { return applied_count_; }
    std::size_t pending_count() const { return heap_.size(); }

private:
    struct Later {
        bool operator()(const PendingApply& a, const PendingApply& b) const {
            if (a.apply_at_ns != b.apply_at_ns) return a.apply_at_ns > b.apply_at_ns;
            return a.seq > b.seq;
        }
    };

    std::vector<spin_t> values_;
    std::priority_queue<PendingApply, std::vector<PendingApply>, Later> heap_;
    std::uint64_t next_seq_ = 0;
    std::uint64_t applied_count_ = 0;
};

// Bounded energy-trace recorder. Candidates arrive in nondecreasing time;
// a repeat of the last timestamp overwrites it. When the buffer would
// exceed the cap it drops every second kept point and doubles the stride,
// so the kept points stay uniformly spaced over the whole run.
class TraceRecorder {
public:
    explicit TraceRecorder(std::size_t cap) : cap_(cap < 2 ? 2 : cap) {}

    void push(double t_ns, double energy);
    // Records unconditionally (the run's final point must never be thinned).
    void push_final(double t_ns, double energy);
    std::vector<TracePoint> take() { return std::move(points_); }

private:
    void compact();

    std::size_t cap_;
    std::uint64_t stride_ = 1;
    std::uint64_t candidates_ = 0;
    std::vector<TracePoint> points_;
};

// Initial configuration: one uniform +-1 draw per spin, ascending index.
std::vector<spin_t> draw_initial_state(std::uint32_t n, Rng& rng);

// Decisions for one synchronous tick. All fields are read from the same
// frozen visible state; the uniform draws are consumed in ascending spin
// index regardless of the order the selection listed them, so a spin's
// decision depends only on the selected set, not on traversal order.
// Returns (spin, value) pairs sorted by spin.
std::vector<std::pair<std::uint32_t, spin_t>> sample_tick_decisions(
    const IsingModel& model, std::span<const spin_t> visible,
    std::span<const std::uint32_t> indices, double i0,
    const Quantizer& quantizer, Rng& rng);

// Executes one annealing run. Deterministic for a fixed (model, config):
// the RNG stream is consumed in a documented order (initial state first,
// then per tick: selection draws followed by per-spin uniforms in ascending
// index; per Gillespie event: waiting time, spin, uniform). Decisions whose
// apply time would exceed t_total are dropped, never applied early.
//
// The energy trace records a point after every landed apply (and at every
// tick). Applies sharing a timestamp land atomically, but their trace
// points are spread across synthetic sub-tick offsets so a coherent
// collective switch is visible as an energy swing rather than collapsing to
// a single point; a global flip leaves the energy itself unchanged, so
// per-batch sampling alone would hide exactly the pathology the trace
// exists to show.
RunResult run(const IsingModel& model, const WeightedGraph& graph,
              const RunConfig& config, const BenchmarkEntry& entry);

} // namespace pbitsim
