#include <benchmark/benchmark.h>

#include "pbitsim/gset.hpp"
#include "pbitsim/gsetgen.hpp"
#include "pbitsim/pbit.hpp"
#include "pbitsim/quantizer.hpp"
#include "pbitsim/rng.hpp"

using namespace pbitsim;

namespace {

const WeightedGraph& g1_twin() {
    static const WeightedGraph graph = generate_twin(*find_entry("G1"));
    return graph;
}

const IsingModel& g1_model() {
    static const IsingModel model = to_ising(g1_twin());
    return model;
}

std::vector<spin_t> random_spins(std::uint32_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<spin_t> spins(n);
    for (auto& s : spins) s = rng.bernoulli(0.5) ? spin_t{1} : spin_t{-1};
    return spins;
}

} // namespace

static void BM_Energy800(benchmark::State& state) {
    const auto& model = g1_model();
    const auto spins = random_spins(model.n(), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(energy(model, spins));
    }
}
BENCHMARK(BM_Energy800);

static void BM_LocalField(benchmark::State& state) {
    const auto& model = g1_model();
    const auto spins = random_spins(model.n(), 2);
    std::uint32_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(local_field(model, spins, i));
        i = (i + 1) % model.n();
    }
}
BENCHMARK(BM_LocalField);

static void BM_Quantize(benchmark::State& state) {
    const Quantizer q(static_cast<int>(state.range(0)), 48.0);
    Rng rng(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(q(96.0 * rng.uniform_pm1()));
    }
}
BENCHMARK(BM_Quantize)->Arg(1)->Arg(6)->Arg(12);

static void BM_PbitSample(benchmark::State& state) {
    Rng rng(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pbit_sample(1.5, 0.8, rng.uniform_pm1()));
    }
}
BENCHMARK(BM_PbitSample);

static void BM_CutValue(benchmark::State& state) {
    const auto& graph = g1_twin();
    const auto spins = random_spins(graph.n, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cut_value(graph, spins));
    }
}
BENCHMARK(BM_CutValue);
