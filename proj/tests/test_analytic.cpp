#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hqc/analytic.hpp"

using namespace hqc;

TEST_CASE("encoding rate") {
    CHECK(encoding_rate({5, 4, 30, 0}) == doctest::Approx(1.0 / 6));
    CHECK(encoding_rate({5, 4, 30, 0}) * 30 == doctest::Approx(5));
    CHECK(encoding_rate({5, 5, 1000000000, 0}) == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(encoding_rate({7, 7, 28, 0}) == doctest::Approx(0.5));
    CHECK(encoding_rate({7, 7, 28, 0}) * 28 == doctest::Approx(14));
}

TEST_CASE("distance upper bound") {
    CHECK(distance_upper_bound({5, 4, 30, 0}) ==
          doctest::Approx(2.5 * std::log(60.0) / std::log(std::sqrt(20.0))));
    CHECK(distance_upper_bound({5, 4, 30, 0}) == doctest::Approx(6.83).epsilon(0.01));
    CHECK(distance_upper_bound({5, 4, 360, 0}) == doctest::Approx(10.98).epsilon(0.01));
    CHECK(distance_upper_bound({5, 4, 360, 0}) >= 8.0);
    CHECK(distance_upper_bound({5, 4, 100, 0}) < distance_upper_bound({5, 4, 200, 0}));
    CHECK_THROWS_AS(distance_upper_bound({4, 4, 100, 0}), std::invalid_argument);
}

TEST_CASE("threshold lower bounds reproduce the table") {
    TessellationParams p54{5, 4, 0, 1.77};
    CHECK(100 * threshold_lower_bound(p54, false) == doctest::Approx(0.51).epsilon(0.01));
    CHECK(100 * threshold_lower_bound(p54, true) == doctest::Approx(0.073).epsilon(0.01));
    TessellationParams p55{5, 5, 0, 1.21};
    CHECK(100 * threshold_lower_bound(p55, false) == doctest::Approx(0.30).epsilon(0.01));
    CHECK(100 * threshold_lower_bound(p55, true) == doctest::Approx(0.025).epsilon(0.01));
    CHECK(threshold_lower_bound(p54, true) < threshold_lower_bound(p54, false));
}

TEST_CASE("per-round rate") {
    CHECK(p_round(0.0, 5) == 0.0);
    CHECK(p_round(0.3, 1) == doctest::Approx(0.3));
    CHECK(p_round(0.19, 2) == doctest::Approx(0.1));
    CHECK(p_round(0.3, 10) < p_round(0.3, 2));
    CHECK_THROWS_AS(p_round(1.0, 2), std::invalid_argument);
}

TEST_CASE("low-p failure approximation") {
    CHECK(low_p_failure_approx(10, 3, 1e-3, 1) == doctest::Approx(3e-5));
    // Even d: prefactor 1/2 and exponent d/2.
    CHECK(low_p_failure_approx(1, 4, 0.01, 1) == doctest::Approx(0.5 * 6 * 1e-4));
    CHECK(low_p_failure_approx(10, 3, 0.0, 1) == 0.0);
    CHECK(low_p_failure_approx(10, 3, 1e-3, 7) == doctest::Approx(7 * 3e-5));
}

TEST_CASE("p_max inversion") {
    double p = 2e-3;
    double target = low_p_failure_approx(500, 8, p, 1);
    CHECK(p_max(500, 8, 1, target) == doctest::Approx(p).epsilon(1e-5));
    CHECK(p_max(1000, 8, 1, target) < p_max(500, 8, 1, target));
    // {5,4} n=360 style target: N_d summed over both sides, d=8.
    double pm = p_max(5760, 8, 1, 1e-5);
    CHECK(pm > 0.75e-3);
    CHECK(pm < 3e-3);
    CHECK_THROWS_AS(p_max(10, 3, 1, 0.0), std::invalid_argument);
}
