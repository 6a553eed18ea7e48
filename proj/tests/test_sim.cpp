#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hqc/analytic.hpp"
#include "hqc/code.hpp"
#include "hqc/complex.hpp"
#include "hqc/rng.hpp"
#include "hqc/sim.hpp"

using namespace hqc;

TEST_CASE("wilson interval") {
    auto [lo0, hi0] = wilson_interval(0, 100);
    CHECK(lo0 == 0.0);
    CHECK(hi0 > 0.0);
    auto [lo5, hi5] = wilson_interval(50, 100);
    CHECK(lo5 + hi5 == doctest::Approx(1.0));
    auto [lo, hi] = wilson_interval(10, 1000);
    CHECK(lo == doctest::Approx(0.0054).epsilon(0.02));
    CHECK(hi == doctest::Approx(0.0183).epsilon(0.02));
    CHECK_THROWS_AS(wilson_interval(3, 2), std::invalid_argument);
}

TEST_CASE("sample_flips statistics") {
    std::mt19937_64 rng = trial_rng(42, 0);
    std::size_t total = 0, draws = 20000, n = 100;
    double p = 0.03;
    for (std::size_t i = 0; i < draws; ++i) {
        auto f = sample_flips(rng, n, p);
        total += f.size();
        for (std::size_t j = 1; j < f.size(); ++j) CHECK(f[j] > f[j - 1]);
        for (std::size_t x : f) CHECK(x < n);
    }
    double mean = double(total) / double(draws);
    CHECK(mean == doctest::Approx(n * p).epsilon(0.05));
    CHECK(sample_flips(rng, 10, 0.0).empty());
    CHECK(sample_flips(rng, 10, 1.0).size() == 10);
}

TEST_CASE("perfect 2d simulation basics") {
    CssCode code = CssCode::from_complex(build_toric_2d(4), 1);
    LogicalBasis lb = code.logical_basis();

    SimResult zero = run_2d_perfect(code, lb, 0.0, 100, 1);
    CHECK(zero.failures_logical == 0);
    CHECK(zero.p_bar == 0.0);
    CHECK(zero.ci_lo == 0.0);

    SimResult half = run_2d_perfect(code, lb, 0.5, 2000, 1);
    CHECK(half.p_bar > 0.5);
}

TEST_CASE("reproducibility across thread counts") {
    CssCode code = CssCode::from_complex(build_toric_2d(4), 1);
    LogicalBasis lb = code.logical_basis();
    SimResult a = run_2d_perfect(code, lb, 0.08, 1000, 9, 1);
    SimResult b = run_2d_perfect(code, lb, 0.08, 1000, 9, 3);
    CHECK(a.failures_logical == b.failures_logical);
    CHECK(a.failures_z == b.failures_z);
    CHECK(a.failures_x == b.failures_x);

    SimResult c = run_2d_noisy(code, lb, 0.02, 0.02, 3, 400, 9, 1);
    SimResult d = run_2d_noisy(code, lb, 0.02, 0.02, 3, 400, 9, 4);
    CHECK(c.failures_logical == d.failures_logical);
}

TEST_CASE("monotone failure rate in p") {
    CssCode code = CssCode::from_complex(build_toric_2d(4), 1);
    LogicalBasis lb = code.logical_basis();
    SimResult lo = run_2d_perfect(code, lb, 0.04, 4000, 11);
    SimResult hi = run_2d_perfect(code, lb, 0.12, 4000, 11);
    CHECK(lo.p_bar < hi.p_bar);
}

TEST_CASE("noisy simulation basics") {
    CssCode code = CssCode::from_complex(build_toric_2d(4), 1);
    LogicalBasis lb = code.logical_basis();
    SimResult zero = run_2d_noisy(code, lb, 0.0, 0.05, 4, 200, 2);
    CHECK(zero.failures_logical == 0);  // measurement noise alone cannot fail
    SimResult r = run_2d_noisy(code, lb, 0.03, 0.03, 4, 500, 2);
    CHECK(r.p_round == doctest::Approx(p_round(r.p_bar, 4)));
    CHECK(r.ci_lo <= r.p_bar);
    CHECK(r.p_bar <= r.ci_hi);
}

TEST_CASE("4d memory time basics") {
    CssCode code = CssCode::from_complex(build_toric_4d(3), 2);
    LogicalBasis lb = code.logical_basis();

    MemoryTimeResult clean =
        run_4d_memory(code, lb, CaRule::toom, 0.0, 0.0, 1, 20, 10, 5);
    CHECK(clean.censored == 10);
    CHECK(clean.mean_T == 20.0);

    MemoryTimeResult lo = run_4d_memory(code, lb, CaRule::toom, 0.008, 0.0, 1, 200, 40, 5);
    MemoryTimeResult hi = run_4d_memory(code, lb, CaRule::toom, 0.05, 0.0, 1, 200, 40, 5);
    CHECK(hi.mean_T < lo.mean_T);
    CHECK(hi.failures_logical + hi.failures_stuck + hi.censored == 40);

    MemoryTimeResult a = run_4d_memory(code, lb, CaRule::dklp, 0.01, 0.0, 1, 50, 30, 5, 1);
    MemoryTimeResult b = run_4d_memory(code, lb, CaRule::dklp, 0.01, 0.0, 1, 50, 30, 5, 3);
    CHECK(a.times == b.times);
    CHECK(a.mean_T == b.mean_T);
}

TEST_CASE("threshold fit recovers planted parameters") {
    double p_c = 0.02, nu = 1.0;
    std::array<double, 3> coef = {0.1, 2.0, 7.0};
    std::vector<FitPoint> data;
    for (double L : {4, 6, 8})
        for (double p = 0.012; p <= 0.0281; p += 0.002) {
            double x = (p - p_c) * std::pow(L, 1.0 / nu);
            FitPoint pt;
            pt.p = p;
            pt.L = L;
            pt.y = coef[0] + coef[1] * x + coef[2] * x * x;
            pt.sigma = 0.01;
            data.push_back(pt);
        }
    FitResult fit = fit_threshold(data);
    CHECK(fit.p_c == doctest::Approx(p_c).epsilon(1e-4));
    CHECK(fit.nu == doctest::Approx(nu).epsilon(1e-3));
    CHECK(fit.residual < 1e-6);

    // Noise moves the fit by a bounded amount.
    std::mt19937_64 rng(4);
    std::normal_distribution<double> noise(0.0, 0.01);
    for (FitPoint& pt : data) pt.y += noise(rng);
    FitResult noisy = fit_threshold(data);
    CHECK(noisy.p_c == doctest::Approx(p_c).epsilon(0.15));

    CHECK_THROWS_AS(fit_threshold({}), std::invalid_argument);
    std::vector<FitPoint> degenerate(data.begin(), data.begin() + 9);
    for (FitPoint& pt : degenerate) pt.L = 4;
    CHECK_THROWS_AS(fit_threshold(degenerate), std::invalid_argument);
}

TEST_CASE("crossing points") {
    std::vector<std::pair<double, double>> a = {{0.1, 1.0}, {0.2, 2.0}, {0.3, 3.0}};
    std::vector<std::pair<double, double>> b = {{0.1, 2.0}, {0.2, 2.0}, {0.3, 2.0}};
    auto cr = crossing_points(a, b);
    REQUIRE(!cr.empty());
    CHECK(cr.front() == doctest::Approx(0.2));

    std::vector<std::pair<double, double>> c = {{0.0, -1.0}, {1.0, 1.0}};
    std::vector<std::pair<double, double>> d = {{0.0, 0.0}, {1.0, 0.0}};
    auto cr2 = crossing_points(c, d);
    REQUIRE(cr2.size() == 1);
    CHECK(cr2[0] == doctest::Approx(0.5));
}
