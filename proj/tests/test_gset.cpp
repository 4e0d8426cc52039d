#include <doctest.h>

#include <sstream>

#include "pbitsim/gset.hpp"
#include "pbitsim/gsetgen.hpp"
#include "pbitsim/oracle.hpp"
#include "pbitsim/rng.hpp"
#include "support/testutil.hpp"

using namespace pbitsim;

TEST_SUITE("gset") {

TEST_CASE("parses a tiny file") {
    std::istringstream in("3 2\n1 2 1\n2 3 -1\n");
    const WeightedGraph g = parse_gset(in);
    CHECK(g.n == 3);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].u == 0);
    CHECK(g.edges[0].v == 1);
    CHECK(g.edges[0].w == 1);
    CHECK(g.edges[1].u == 1);
    CHECK(g.edges[1].v == 2);
    CHECK(g.edges[1].w == -1);
}

TEST_CASE("accepts CRLF and blank lines") {
    std::istringstream in("2 1\r\n\r\n1 2 1\r\n\r\n");
    const WeightedGraph g = parse_gset(in);
    CHECK(g.n == 2);
    CHECK(g.edges.size() == 1);
}

TEST_CASE("parse errors name the line") {
    auto fails_with = [](const char* text, const char* needle) {
        std::istringstream in(text);
        try {
            parse_gset(in);
            FAIL_CHECK("expected parse failure for: " << text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    fails_with("3\n", "malformed header");
    fails_with("3 2\n1 1 1\n2 3 1\n", "line 2");
    fails_with("3 2\n1 1 1\n2 3 1\n", "self-loop");
    fails_with("3 2\n1 4 1\n2 3 1\n", "index");
    fails_with("3 2\n1 2 1\n2 1 1\n", "duplicate");
    fails_with("3 2\n1 2 1\n", "has 1");
    fails_with("3 1\n1 2 1\n2 3 1\n", "more edge lines");
    fails_with("3 2\n1 2\n2 3 1\n", "malformed edge");
}

TEST_CASE("MaxCut reduction: single edge truth table") {
    WeightedGraph g;
    g.n = 2;
    g.edges = {{0, 1, 1}};
    const IsingModel m = to_ising(g);

    SpinState cutting;
    cutting.values = {1, -1};
    CHECK(energy(m, cutting) == doctest::Approx(-1.0));
    CHECK(cut_value(g, cutting) == 1);
    CHECK((g.total_weight() - energy(m, cutting)) / 2.0 == doctest::Approx(1.0));

    SpinState uncut;
    uncut.values = {1, 1};
    CHECK(cut_value(g, uncut) == 0);
}

TEST_CASE("cut-from-energy identity on random graphs") {
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testutil::random_graph(16, 0.3, true, rng);
        const IsingModel m = to_ising(g);
        const double w_total = static_cast<double>(g.total_weight());
        for (int s = 0; s < 10; ++s) {
            const auto spins = testutil::random_spins(16, rng);
            const double h = energy(m, spins);
            CHECK(static_cast<double>(cut_value(g, spins)) ==
                  doctest::Approx((w_total - h) / 2.0));
        }
    }
}

TEST_CASE("cut value is invariant under a global flip") {
    Rng rng(102);
    const auto g = testutil::random_graph(20, 0.25, true, rng);
    for (int s = 0; s < 20; ++s) {
        auto spins = testutil::random_spins(20, rng);
        const auto cut = cut_value(g, spins);
        for (auto& v : spins) v = static_cast<spin_t>(-v);
        CHECK(cut_value(g, spins) == cut);
    }
}

TEST_CASE("triangle best cut via exhaustive check") {
    WeightedGraph g;
    g.n = 3;
    g.edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
    CHECK(brute_force_maxcut(g).best_cut == 2);
}

TEST_CASE("normalized cut") {
    const BenchmarkEntry g1{"G1", 800, 19176, 11624};
    CHECK(normalized_cut(11624, g1) == doctest::Approx(1.0));
    CHECK(normalized_cut(0, g1) == doctest::Approx(0.0));
    const BenchmarkEntry g6{"G6", 800, 19176, 2178};
    CHECK(normalized_cut(1089, g6) == doctest::Approx(0.5));
    CHECK_THROWS_AS(normalized_cut(1, BenchmarkEntry{"bad", 2, 1, 0}),
                    std::invalid_argument);
}

TEST_CASE("registry holds the ten instances") {
    const auto& entries = registry();
    REQUIRE(entries.size() == 10);

    const BenchmarkEntry* g47 = find_entry("G47");
    REQUIRE(g47 != nullptr);
    CHECK(g47->n == 1000);
    CHECK(g47->m == 9990);
    CHECK(g47->target == 6657);

    const BenchmarkEntry* g22 = find_entry("G22");
    REQUIRE(g22 != nullptr);
    CHECK(g22->n == 2000);
    CHECK(g22->m == 19990);
    CHECK(g22->target == 13359);

    const BenchmarkEntry* g11 = find_entry("G11");
    REQUIRE(g11 != nullptr);
    CHECK(g11->target == 564);

    CHECK(find_entry("G99") == nullptr);
}

TEST_CASE("twin generator matches the registry shapes and round-trips") {
    for (const char* name : {"G1", "G11", "G14"}) {
        const BenchmarkEntry* entry = find_entry(name);
        REQUIRE(entry != nullptr);
        const WeightedGraph twin = generate_twin(*entry);
        CHECK(twin.n == entry->n);
        CHECK(twin.edges.size() == entry->m);

        std::ostringstream out;
        write_gset(twin, out);
        std::istringstream in(out.str());
        const WeightedGraph parsed = parse_gset(in);
        CHECK(parsed.n == twin.n);
        CHECK(parsed.edges.size() == twin.edges.size());
    }
}

TEST_CASE("twin generation is deterministic") {
    const BenchmarkEntry* entry = find_entry("G6");
    const WeightedGraph a = generate_twin(*entry);
    const WeightedGraph b = generate_twin(*entry);
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        CHECK(a.edges[i].u == b.edges[i].u);
        CHECK(a.edges[i].v == b.edges[i].v);
        CHECK(a.edges[i].w == b.edges[i].w);
    }
}

} // TEST_SUITE
