#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hqc/code.hpp"
#include "hqc/decode.hpp"

namespace hqc {

struct SimResult {
    std::size_t trials = 0;
    std::size_t failures_logical = 0;  // either side failed
    std::size_t failures_stuck = 0;
    std::size_t failures_z = 0;  // Z-error side only
    std::size_t failures_x = 0;
    double p = 0, q = 0;
    std::size_t T = 0;
    double p_bar = 0, ci_lo = 0, ci_hi = 0;
    double p_round = 0;  // derived for noisy runs
    std::uint64_t seed = 0;
};

struct MemoryTimeResult {
    std::size_t trials = 0;
    std::vector<std::size_t> times;  // survival time per trial, in cycles
    double mean_T = 0, stderr_T = 0;
    std::size_t censored = 0;
    std::size_t failures_logical = 0, failures_stuck = 0;
    double p = 0, q = 0;
    std::size_t m_sweeps = 1, max_cycles = 0;
    std::uint64_t seed = 0;
};

std::pair<double, double> wilson_interval(std::size_t failures, std::size_t trials,
                                          double confidence = 0.95);

/// Monte Carlo logical error rate of a 2D code under MWPM with perfect
/// syndrome extraction, independent X and Z errors at rate p; a trial fails
/// when either side decodes to a nontrivial class.
SimResult run_2d_perfect(const CssCode& code, const LogicalBasis& logicals, double p,
                         std::size_t trials, std::uint64_t seed, int threads = 1);

/// T rounds of accumulation with syndrome bits flipped at rate q, followed
/// by a perfect round; space-time MWPM on both sides.
SimResult run_2d_noisy(const CssCode& code, const LogicalBasis& logicals, double p, double q,
                       std::size_t T, std::size_t trials, std::uint64_t seed, int threads = 1);

/// Memory time of a 4D toric code under a cellular-automaton rule: each
/// cycle injects face errors at rate p, applies m sweeps on the measured
/// (rate-q flipped) syndrome, and checks correctability with a snapshot
/// decoder. Survival is right-censored at max_cycles.
MemoryTimeResult run_4d_memory(const CssCode& code, const LogicalBasis& logicals, CaRule rule,
                               double p, double q, std::size_t m, std::size_t max_cycles,
                               std::size_t trials, std::uint64_t seed, int threads = 1);

struct FitPoint {
    double p = 0, L = 0, y = 0, sigma = 1;
};

struct FitResult {
    double p_c = 0, nu = 0;
    std::array<double, 3> coeffs{};  // y = c0 + c1 x + c2 x^2, x = (p - p_c) L^(1/nu)
    double residual = 0;             // weighted sum of squares
};

/// Quadratic scaling-collapse fit by grid search over (p_c, nu) with an
/// inner linear least-squares solve, then local refinement. Requires at
/// least two distinct L and three distinct p.
FitResult fit_threshold(const std::vector<FitPoint>& data);

/// p-values where two curves sampled on a common ascending p grid cross.
/// Strict sign changes are located by linear interpolation; a run of exact
/// ties counts as a single crossing at its midpoint only when the sign of
/// the difference flips across the run.
std::vector<double> crossing_points(const std::vector<std::pair<double, double>>& a,
                                    const std::vector<std::pair<double, double>>& b);

}  // namespace hqc
