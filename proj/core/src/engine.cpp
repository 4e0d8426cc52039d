#include "pbitsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pbitsim/anneal.hpp"
#include "pbitsim/pbit.hpp"

namespace pbitsim {

double spin_rate(double tau_ns, double c) {
    if (!(tau_ns > 0.0) || !(c >= 1.0)) {
        throw std::invalid_argument("spin_rate: need tau > 0 and c >= 1");
    }
    return 1.0 / (tau_ns * c);
}

void RunConfig::validate() const {
    if (!(tau_ns > 0.0)) throw std::invalid_argument("config: tau_ns must be > 0");
    if (!(c >= 1.0)) throw std::invalid_argument("config: c must be >= 1");
    if (bits < 1 || bits > Quantizer::kMaxBits) {
        throw std::invalid_argument("config: bits must be in [1,12]");
    }
    if (!(d_ns >= 0.0)) throw std::invalid_argument("config: d_ns must be >= 0");
    if (!(t_total_ns >= 0.0)) {
        throw std::invalid_argument("config: t_total_ns must be >= 0");
    }
    if (policy == Policy::TickSequential && c != 1.0) {
        throw std::invalid_argument("config: tick-sequential requires c = 1");
    }
    if (i0_min.has_value() != i0_max.has_value()) {
        throw std::invalid_argument("config: set both i0_min and i0_max or neither");
    }
    if (i0_min && (!(*i0_min > 0.0) || !(*i0_max >= *i0_min))) {
        throw std::invalid_argument("config: need 0 < i0_min <= i0_max");
    }
}

void TraceRecorder::push(double t_ns, double energy) {
    if (!points_.empty() && points_.back().t_ns == t_ns) {
        points_.back().energy = energy;
        return;
    }
    const bool keep = (candidates_ % stride_) == 0;
    ++candidates_;
    if (!keep) return;
    if (points_.size() == cap_) compact();
    points_.push_back({t_ns, energy});
}

void TraceRecorder::push_final(double t_ns, double energy) {
    if (!points_.empty() && points_.back().t_ns == t_ns) {
        points_.back().energy = energy;
        return;
    }
    if (points_.size() == cap_) compact();
    points_.push_back({t_ns, energy});
}

void TraceRecorder::compact() {
    std::size_t out = 0;
    for (std::size_t i = 0; i < points_.size(); i += 2) {
        points_[out++] = points_[i];
    }
    points_.resize(out);
    stride_ *= 2;
}

std::vector<spin_t> draw_initial_state(std::uint32_t n, Rng& rng) {
    std::vector<spin_t> spins(n);
    for (auto& s : spins) {
        s = rng.uniform01() < 0.5 ? spin_t{1} : spin_t{-1};
    }
    return spins;
}

std::vector<std::pair<std::uint32_t, spin_t>> sample_tick_decisions(
    const IsingModel& model, std::span<const spin_t> visible,
    std::span<const std::uint32_t> indices, double i0,
    const Quantizer& quantizer, Rng& rng) {
    std::vector<std::uint32_t> order(indices.begin(), indices.end());
    std::sort(order.begin(), order.end());
    std::vector<std::pair<std::uint32_t, spin_t>> decisions;
    decisions.reserve(order.size());
    for (std::uint32_t i : order) {
        const double field = local_field(model, visible, i);
        const double u = rng.uniform_pm1();
        decisions.emplace_back(i, pbit_sample(quantizer(field), i0, u));
    }
    return decisions;
}

namespace {

// Per-run bookkeeping shared by the policy loops.
struct RunContext {
    const IsingModel& model;
    const RunConfig& config;
    DelayedApplyQueue& queue;
    TraceRecorder& trace;
    double energy_now; // running energy of the visible state
    std::vector<PendingApply>* log;
    std::vector<PendingApply> due;

    // Lands every due apply, keeping the running energy in sync, and records
    // a trace point after each apply. Applies sharing a timestamp (a
    // synchronous batch) land atomically for visibility purposes, but their
    // trace points are spread over synthetic sub-tick offsets ending at the
    // batch time; a collective switch therefore shows up as a full energy
    // swing in the trajectory instead of vanishing when the before/after
    // states happen to have equal energy (e.g. a global flip).
    void drain_applies(double t_ns) {
        due.clear();
        while (auto next = queue.pop_due(t_ns)) {
            due.push_back(*next);
        }
        std::size_t i = 0;
        while (i < due.size()) {
            std::size_t j = i;
            while (j < due.size() && due[j].apply_at_ns == due[i].apply_at_ns) ++j;
            const double batch_t = due[i].apply_at_ns;
            // consecutive batches are one tick apart, so the spread stays
            // inside the preceding interval
            const double delta =
                config.tau_ns / static_cast<double>(j - i + 1);
            for (std::size_t k = i; k < j; ++k) {
                const PendingApply& entry = due[k];
                const spin_t old = queue.values()[entry.spin];
                if (entry.value != old) {
                    energy_now +=
                        2.0 * old * local_field(model, queue.values(), entry.spin);
                }
                queue.write(entry);
                if (log) log->push_back(entry);
                trace.push(batch_t - static_cast<double>(j - 1 - k) * delta,
                           energy_now);
            }
            i = j;
        }
    }

    void schedule_decision(std::uint32_t spin, spin_t value, double decided_at) {
        const double apply_at = decided_at + config.d_ns;
        if (apply_at <= config.t_total_ns) {
            queue.schedule(spin, value, apply_at);
        }
    }
};

TickSelection select_for(Policy policy, std::uint32_t n, double c, double t,
                         Rng& rng) {
    switch (policy) {
    case Policy::TickRandom: return tick_random_select(n, c, t, rng);
    case Policy::TickBlockRandom: return tick_block_select(n, c, t, rng);
    case Policy::TickBlockRandomStride:
        return tick_block_stride_select(n, c, t, rng);
    default:
        throw std::logic_error("select_for: not a tick selection policy");
    }
}

void run_tick_policy(RunContext& ctx, const AnnealSchedule& schedule,
                     const Quantizer& quantizer, Rng& rng) {
    const RunConfig& cfg = ctx.config;
    const std::uint32_t n = ctx.model.n();
    for (std::uint64_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * cfg.tau_ns;
        if (t >= cfg.t_total_ns) break;
        ctx.drain_applies(t);
        ctx.trace.push(t, ctx.energy_now);
        const double i0 = schedule.i0_at(t);
        const TickSelection sel = select_for(cfg.policy, n, cfg.c, t, rng);
        const auto decisions = sample_tick_decisions(
            ctx.model, ctx.queue.values(), sel.indices, i0, quantizer, rng);
        for (const auto& [spin, value] : decisions) {
            ctx.schedule_decision(spin, value, t);
        }
    }
}

void run_gillespie(RunContext& ctx, const AnnealSchedule& schedule,
                   const Quantizer& quantizer, Rng& rng) {
    const RunConfig& cfg = ctx.config;
    GillespieStepper stepper(ctx.model.n(), cfg.tau_ns, cfg.c);
    ctx.trace.push(0.0, ctx.energy_now);
    double t = 0.0;
    for (;;) {
        const GillespieEvent ev = stepper.next(rng);
        const double t_event = t + ev.wait_ns;
        if (t_event > cfg.t_total_ns) break;
        t = t_event;
        ctx.drain_applies(t);
        const double i0 = schedule.i0_at(t);
        const double field = local_field(ctx.model, ctx.queue.values(), ev.spin);
        const double u = rng.uniform_pm1();
        ctx.schedule_decision(ev.spin, pbit_sample(quantizer(field), i0, u), t);
    }
}

} // namespace

RunResult run(const IsingModel& model, const WeightedGraph& graph,
              const RunConfig& config, const BenchmarkEntry& entry) {
    config.validate();
    if (graph.n != model.n()) {
        throw std::invalid_argument("run: graph and model sizes differ");
    }
    const std::uint32_t n = model.n();

    RunResult result;
    result.graph = entry.name;
    result.config = config;

    Rng rng(config.seed);
    std::vector<spin_t> initial = draw_initial_state(n, rng);
    TraceRecorder trace(config.sample_cap);
    const double t_total = config.t_total_ns;

    if (config.policy == Policy::TickSequential) {
        // Algorithmic reference: in-place writes, no apply queue, d unused.
        std::vector<spin_t> values = initial;
        double energy_now = energy(model, values);
        std::uint64_t writes = 0;
        if (t_total > 0.0) {
            const AnnealSchedule schedule =
                config.i0_min ? AnnealSchedule(*config.i0_min, *config.i0_max, t_total)
                              : AnnealSchedule::for_model(model, t_total);
            const Quantizer quantizer(config.bits, model.field_full_scale());
            for (std::uint64_t k = 0;; ++k) {
                const double t = static_cast<double>(k) * config.tau_ns;
                if (t >= t_total) break;
                trace.push(t, energy_now);
                sequential_sweep(model, values, schedule.i0_at(t), quantizer, rng,
                                 &energy_now);
                writes += n;
            }
        }
        trace.push_final(t_total, energy_now);
        result.applied_updates = writes;
        result.final_spins = std::move(values);
    } else {
        DelayedApplyQueue queue(initial);
        RunContext ctx{model, config, queue, trace, energy(model, queue.values()),
                       config.record_apply_log ? &result.apply_log : nullptr};
        if (t_total > 0.0) {
            const AnnealSchedule schedule =
                config.i0_min ? AnnealSchedule(*config.i0_min, *config.i0_max, t_total)
                              : AnnealSchedule::for_model(model, t_total);
            const Quantizer quantizer(config.bits, model.field_full_scale());
            if (config.policy == Policy::Gillespie) {
                run_gillespie(ctx, schedule, quantizer, rng);
            } else {
                run_tick_policy(ctx, schedule, quantizer, rng);
            }
        }
        ctx.drain_applies(t_total);
        trace.push_final(t_total, ctx.energy_now);
        result.applied_updates = queue.applied_count();
        result.final_spins.assign(queue.values().begin(), queue.values().end());
    }

    result.energy_trace = trace.take();
    result.final_energy = energy(model, result.final_spins);
    result.final_cut = cut_value(graph, result.final_spins);
    result.normalized_cut = normalized_cut(result.final_cut, entry);
    return result;
}

} // namespace pbitsim
