#include <doctest.h>

#include <cmath>

#include "pbitsim/cost.hpp"

using namespace pbitsim;

TEST_SUITE("cost") {

TEST_CASE("physical p-bit counts") {
    CHECK(physical_pbits(800, 3.0) == 267);
    CHECK(physical_pbits(800, 1.0) == 800);
    CHECK(physical_pbits(2000, 30.0) == 67);
    CHECK(physical_pbits(1000, 1.25) == 800);
}

TEST_CASE("hardware cost with unit weights") {
    CHECK(hw_cost(100, 1.0, 12) == doctest::Approx(200.0));
    // halving the resolution from 12 to 6 bits scales the cost by 0.75
    CHECK(hw_cost(100, 1.0, 6) / hw_cost(100, 1.0, 12) == doctest::Approx(0.75));
}

TEST_CASE("normalized cost reproduces the reference table values") {
    // n divisible by every c here, so ceil(n/c)/n = 1/c exactly
    const std::uint64_t n = 1200;
    CHECK(normalized_cost(n, 1.0, 6) == doctest::Approx(0.7500).epsilon(1e-9));
    CHECK(normalized_cost(n, 3.0, 3) == doctest::Approx(0.208333).epsilon(1e-6));
    CHECK(normalized_cost(n, 3.0, 10) == doctest::Approx(0.305556).epsilon(1e-6));
    CHECK(normalized_cost(n, 1.0, 3) == doctest::Approx(0.6250).epsilon(1e-9));
    CHECK(normalized_cost(n, 1.0, 12) == doctest::Approx(1.0000).epsilon(1e-9));
    CHECK(normalized_cost(n, 1.0, 10) == doctest::Approx(0.916667).epsilon(1e-6));
    CHECK(normalized_cost(n, 1.0, 4) == doctest::Approx(0.666667).epsilon(1e-6));
    CHECK(normalized_cost(n, 3.0, 4) == doctest::Approx(0.222222).epsilon(1e-6));
}

TEST_CASE("normalized cost is monotone in c and b") {
    const std::uint64_t n = 840; // divisible by 1..8
    double prev = 10.0;
    for (double c : {1.0, 2.0, 3.0, 5.0, 10.0}) {
        const double cost = normalized_cost(n, c, 8);
        CHECK(cost <= prev);
        prev = cost;
    }
    prev = 0.0;
    for (int b = 1; b <= 12; ++b) {
        const double cost = normalized_cost(n, 1.0, b);
        CHECK(cost > prev);
        prev = cost;
    }
}

TEST_CASE("normalized cost is size independent when the ceiling is exact") {
    for (double c : {1.0, 2.0, 4.0}) {
        for (int b : {1, 4, 9, 12}) {
            CHECK(normalized_cost(400, c, b) ==
                  doctest::Approx(normalized_cost(1600, c, b)));
        }
    }
}

TEST_CASE("ceiling effects raise the cost for indivisible sizes") {
    // ceil(800/3)/800 > 1/3
    CHECK(normalized_cost(800, 3.0, 10) ==
          doctest::Approx(267.0 / 800.0 * (1.0 + 10.0 / 12.0) / 2.0));
    CHECK(normalized_cost(800, 3.0, 10) > normalized_cost(900, 3.0, 10));
}

TEST_CASE("delay-to-update ratio") {
    CHECK(d_tau_ratio(5.0, 5.0) == doctest::Approx(1.0));
    CHECK(d_tau_ratio(5.0, 20.0) == doctest::Approx(0.25));
    CHECK(d_tau_ratio(5.0, 7.5) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(d_tau_ratio(5.0, 0.0), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(physical_pbits(10, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(hw_cost(10, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(hw_cost(10, 1.0, 13), std::invalid_argument);
    CHECK_THROWS_AS(hw_cost(10, 1.0, 6, {0.0, 1.0}), std::invalid_argument);
}

} // TEST_SUITE
