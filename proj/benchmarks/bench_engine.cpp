#include <benchmark/benchmark.h>

#include "pbitsim/engine.hpp"
#include "pbitsim/gsetgen.hpp"

using namespace pbitsim;

namespace {

struct Fixture {
    WeightedGraph graph;
    IsingModel model;
    const BenchmarkEntry* entry;
};

const Fixture& g11_fixture() {
    static const Fixture f = [] {
        const BenchmarkEntry* entry = find_entry("G11");
        WeightedGraph graph = generate_twin(*entry);
        IsingModel model = to_ising(graph);
        return Fixture{std::move(graph), std::move(model), entry};
    }();
    return f;
}

RunConfig base_config(Policy policy) {
    RunConfig cfg;
    cfg.policy = policy;
    cfg.tau_ns = 5.0;
    cfg.d_ns = 5.0;
    cfg.bits = 10;
    cfg.t_total_ns = 500.0;
    cfg.seed = 1;
    return cfg;
}

} // namespace

// Full 500 ns runs on the 800-spin toroidal instance.
static void BM_RunTickRandom(benchmark::State& state) {
    const auto& f = g11_fixture();
    RunConfig cfg = base_config(Policy::TickRandom);
    cfg.c = static_cast<double>(state.range(0));
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(run(f.model, f.graph, cfg, *f.entry));
    }
}
BENCHMARK(BM_RunTickRandom)->Arg(1)->Arg(3);

static void BM_RunBlockStride(benchmark::State& state) {
    const auto& f = g11_fixture();
    RunConfig cfg = base_config(Policy::TickBlockRandomStride);
    cfg.c = 3.0;
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(run(f.model, f.graph, cfg, *f.entry));
    }
}
BENCHMARK(BM_RunBlockStride);

static void BM_RunGillespie(benchmark::State& state) {
    const auto& f = g11_fixture();
    RunConfig cfg = base_config(Policy::Gillespie);
    cfg.tau_ns = static_cast<double>(state.range(0));
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(run(f.model, f.graph, cfg, *f.entry));
    }
}
BENCHMARK(BM_RunGillespie)->Arg(5)->Arg(10);

static void BM_RunSequential(benchmark::State& state) {
    const auto& f = g11_fixture();
    RunConfig cfg = base_config(Policy::TickSequential);
    for (auto _ : state) {
        cfg.seed++;
        benchmark::DoNotOptimize(run(f.model, f.graph, cfg, *f.entry));
    }
}
BENCHMARK(BM_RunSequential);
