// Analytic threshold lower bounds reproduced to the printed precision.
// Tolerance is one unit in the last printed digit: the table's constants
// are themselves rounded to three digits, which shifts the last digit of
// the derived percentages by up to that much.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hqc/analytic.hpp"

using namespace hqc;

TEST_CASE("{5,4} c=1.77 bounds") {
    TessellationParams p{5, 4, 0, 1.77};
    CHECK(std::fabs(100 * threshold_lower_bound(p, false) - 0.51) < 0.01);
    CHECK(std::fabs(100 * threshold_lower_bound(p, true) - 0.073) < 0.001);
}

TEST_CASE("{5,5} c=1.21 bounds") {
    TessellationParams p{5, 5, 0, 1.21};
    CHECK(std::fabs(100 * threshold_lower_bound(p, false) - 0.30) < 0.01);
    CHECK(std::fabs(100 * threshold_lower_bound(p, true) - 0.025) < 0.001);
}
