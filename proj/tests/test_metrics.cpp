#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pbitsim/metrics.hpp"
#include "pbitsim/oracle.hpp"
#include "pbitsim/quantizer.hpp"
#include "support/testutil.hpp"

using namespace pbitsim;

namespace {

std::vector<TracePoint> make_trace(const std::vector<double>& energies) {
    std::vector<TracePoint> trace;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        trace.push_back({static_cast<double>(i), energies[i]});
    }
    return trace;
}

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("oscillation score of a constant tail is zero") {
    const auto trace = make_trace(std::vector<double>(40, -3.5));
    CHECK(oscillation_score(trace) == doctest::Approx(0.0));
}

TEST_CASE("oscillation score of a 0/2 alternation is one") {
    std::vector<double> energies(40);
    for (std::size_t i = 0; i < energies.size(); ++i) {
        energies[i] = (i % 2 == 0) ? 0.0 : 2.0;
    }
    CHECK(oscillation_score(make_trace(energies)) == doctest::Approx(1.0));
}

TEST_CASE("oscillation score rejects a short trace") {
    const auto trace = make_trace({1, 2, 3, 4, 5});
    CHECK_THROWS_AS(oscillation_score(trace), std::invalid_argument);
    CHECK_THROWS_AS(oscillation_score(trace, 0.0), std::invalid_argument);
}

TEST_CASE("aggregate mean cut") {
    CHECK(aggregate_mean_cut({{0.9, 1.0}}) == doctest::Approx(0.95));
    CHECK(aggregate_mean_cut({{0.8, 0.8}, {1.0, 1.0}}) == doctest::Approx(0.9));
    CHECK(aggregate_mean_cut({{1.0}, {1.0}, {1.0}}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(aggregate_mean_cut({}), std::invalid_argument);
    CHECK_THROWS_AS(aggregate_mean_cut({{0.9}, {0.8, 0.7}}), std::invalid_argument);
}

TEST_CASE("landscape bins: one bin collapses to median and max") {
    std::vector<CostPoint> points;
    for (double cut : {0.5, 0.9, 1.0}) points.push_back({0.4, cut});
    const auto bins = landscape_bins(points, 40);
    REQUIRE(bins.size() == 1);
    CHECK(bins[0].bin_center_cost == doctest::Approx(0.4));
    CHECK(bins[0].median_cut_norm == doctest::Approx(0.9));
    CHECK(bins[0].max_cut_norm == doctest::Approx(1.0));
}

TEST_CASE("landscape bins: single point") {
    const std::vector<CostPoint> points{{0.7, 0.88}};
    const auto bins = landscape_bins(points, 40);
    REQUIRE(bins.size() == 1);
    CHECK(bins[0].median_cut_norm == doctest::Approx(0.88));
    CHECK(bins[0].max_cut_norm == doctest::Approx(0.88));
}

TEST_CASE("landscape bins: distant costs land in separate bins") {
    const std::vector<CostPoint> points{{0.1, 0.5}, {0.9, 0.6}};
    const auto bins = landscape_bins(points, 40);
    REQUIRE(bins.size() == 2);
    CHECK(bins[0].bin_center_cost < bins[1].bin_center_cost);
}

TEST_CASE("landscape bins are permutation invariant") {
    Rng rng(303);
    std::vector<CostPoint> points;
    for (int k = 0; k < 200; ++k) {
        points.push_back({rng.uniform01(), rng.uniform01()});
    }
    auto shuffled = points;
    for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
        std::swap(shuffled[i], shuffled[rng.uniform_index(i + 1)]);
    }
    const auto a = landscape_bins(points, 40);
    const auto b = landscape_bins(shuffled, 40);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].bin_center_cost == doctest::Approx(b[i].bin_center_cost));
        CHECK(a[i].median_cut_norm == doctest::Approx(b[i].median_cut_norm));
        CHECK(a[i].max_cut_norm == doctest::Approx(b[i].max_cut_norm));
    }
}

TEST_CASE("brute force MaxCut on known graphs") {
    WeightedGraph edge;
    edge.n = 2;
    edge.edges = {{0, 1, 1}};
    CHECK(brute_force_maxcut(edge).best_cut == 1);

    WeightedGraph triangle;
    triangle.n = 3;
    triangle.edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
    CHECK(brute_force_maxcut(triangle).best_cut == 2);

    WeightedGraph cycle4;
    cycle4.n = 4;
    cycle4.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
    CHECK(brute_force_maxcut(cycle4).best_cut == 4);
}

TEST_CASE("brute force witness achieves the reported cut") {
    Rng rng(304);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testutil::random_graph(12, 0.35, true, rng);
        const auto best = brute_force_maxcut(g);
        CHECK(cut_value(g, best.witness) == best.best_cut);
        // normalized against its own optimum the witness is exactly 1
        if (best.best_cut > 0) {
            const BenchmarkEntry entry{"toy", g.n,
                                       static_cast<std::uint32_t>(g.edges.size()),
                                       best.best_cut};
            CHECK(normalized_cut(best.best_cut, entry) == doctest::Approx(1.0));
        }
    }
    WeightedGraph too_big;
    too_big.n = 25;
    CHECK_THROWS_AS(brute_force_maxcut(too_big), std::invalid_argument);
}

TEST_CASE("boltzmann oracle: zero gain is uniform") {
    Rng rng(305);
    const auto model = testutil::random_model(6, 0.5, rng, true);
    const auto table = brute_force_boltzmann(model, 0.0);
    for (double p : table) CHECK(p == doctest::Approx(1.0 / 64.0));
}

TEST_CASE("boltzmann oracle: one biased spin matches the update rule") {
    const IsingModel m(1, {}, {1.0});
    for (double i0 : {0.1, 0.5, 1.3}) {
        const auto table = brute_force_boltzmann(m, i0);
        REQUIRE(table.size() == 2);
        CHECK(table[1] == doctest::Approx((1.0 + std::tanh(i0)) / 2.0));
    }
}

TEST_CASE("boltzmann oracle: strong ferromagnet concentrates on aligned states") {
    const IsingModel m(2, {{0, 1, 1.0}});
    const auto table = brute_force_boltzmann(m, 5.0);
    REQUIRE(table.size() == 4);
    CHECK(table[0] == doctest::Approx(0.5).epsilon(1e-4));  // --
    CHECK(table[3] == doctest::Approx(0.5).epsilon(1e-4));  // ++
    CHECK(table[1] < 1e-4);
    CHECK(table[2] < 1e-4);
}

TEST_CASE("sequential dynamics sample the oracle distribution") {
    // Short version of the full acceptance check: one 6-spin model, constant
    // gain, total-variation distance against exhaustive enumeration.
    Rng rng(306);
    const auto model = testutil::random_model(6, 0.5, rng, true);
    const Quantizer quantizer(12, model.field_full_scale());
    const double i0 = 0.5;

    auto values = testutil::random_spins(6, rng);
    std::vector<double> histogram(64, 0.0);
    const int burn_in = 500;
    const int sweeps = 40000;
    Rng chain(307);
    for (int s = 0; s < burn_in; ++s) {
        sequential_sweep(model, values, i0, quantizer, chain);
    }
    for (int s = 0; s < sweeps; ++s) {
        sequential_sweep(model, values, i0, quantizer, chain);
        histogram[testutil::state_index(values)] += 1.0;
    }
    for (auto& h : histogram) h /= sweeps;

    const auto expected = brute_force_boltzmann(model, i0);
    CHECK(total_variation(histogram, expected) < 0.05);
}

TEST_CASE("total variation basics") {
    const std::vector<double> p{0.5, 0.5};
    const std::vector<double> q{1.0, 0.0};
    CHECK(total_variation(p, q) == doctest::Approx(0.5));
    CHECK(total_variation(p, p) == doctest::Approx(0.0));
}

} // TEST_SUITE
