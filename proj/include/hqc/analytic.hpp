#pragma once

#include <cstddef>

namespace hqc {

/// {r,s} tessellation with n edges and distance-scaling constant c.
struct TessellationParams {
    int r = 0;
    int s = 0;
    std::size_t n = 0;
    double c = 0.0;
};

/// k/n = 1 - 2/r - 2/s + 2/n.
double encoding_rate(const TessellationParams& p);

/// d <= (r/2) log_sqrt(rs)(2n); hyperbolic (r,s) only, otherwise throws
/// std::invalid_argument.
double distance_upper_bound(const TessellationParams& p);

/// exp(-2/c) / (4 (max(r,s)-1)^2), or with noisy measurements
/// exp(-4/c) / (4 (max(r,s)+1)^2).
double threshold_lower_bound(const TessellationParams& p, bool noisy);

/// Per-round logical error rate with (1 - P_round)^T = 1 - P_bar.
double p_round(double p_bar, std::size_t T);

/// T * N_d * (3/4 - (-1)^d/4) * C(d, ceil(d/2)) * p^ceil(d/2).
double low_p_failure_approx(std::size_t n_d, std::size_t d, double p, std::size_t T = 1);

/// Largest p with low_p_failure_approx(p) = target, by bisection to
/// relative tolerance 1e-6.
double p_max(std::size_t n_d, std::size_t d, std::size_t T, double target);

}  // namespace hqc
