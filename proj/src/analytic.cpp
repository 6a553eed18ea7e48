#include "hqc/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace hqc {

double encoding_rate(const TessellationParams& p) {
    if (p.n < 1) throw std::invalid_argument("encoding_rate: n must be >= 1");
    return 1.0 - 2.0 / p.r - 2.0 / p.s + 2.0 / double(p.n);
}

double distance_upper_bound(const TessellationParams& p) {
    if (1.0 / p.r + 1.0 / p.s >= 0.5)
        throw std::invalid_argument("distance_upper_bound: (r,s) is not hyperbolic");
    return (p.r / 2.0) * std::log(2.0 * double(p.n)) / std::log(std::sqrt(double(p.r) * p.s));
}

double threshold_lower_bound(const TessellationParams& p, bool noisy) {
    if (p.c <= 0) throw std::invalid_argument("threshold_lower_bound: c must be positive");
    double m = double(p.r > p.s ? p.r : p.s);
    if (noisy) return std::exp(-4.0 / p.c) / (4.0 * (m + 1.0) * (m + 1.0));
    return std::exp(-2.0 / p.c) / (4.0 * (m - 1.0) * (m - 1.0));
}

double p_round(double p_bar, std::size_t T) {
    if (p_bar < 0.0 || p_bar >= 1.0)
        throw std::invalid_argument("p_round: need 0 <= p_bar < 1");
    if (T < 1) throw std::invalid_argument("p_round: T must be >= 1");
    return 1.0 - std::pow(1.0 - p_bar, 1.0 / double(T));
}

double low_p_failure_approx(std::size_t n_d, std::size_t d, double p, std::size_t T) {
    std::size_t half = (d + 1) / 2;
    double binom = 1.0;
    for (std::size_t i = 0; i < half; ++i)
        binom = binom * double(d - i) / double(i + 1);
    double prefactor = 0.75 - (d % 2 == 0 ? 0.25 : -0.25);
    return double(T) * double(n_d) * prefactor * binom * std::pow(p, double(half));
}

double p_max(std::size_t n_d, std::size_t d, std::size_t T, double target) {
    if (target <= 0.0 || target >= 1.0)
        throw std::invalid_argument("p_max: target must be in (0,1)");
    double lo = 0.0, hi = 0.5;
    while (low_p_failure_approx(n_d, d, hi, T) < target) {
        lo = hi;
        hi *= 2.0;
    }
    while ((hi - lo) > 1e-6 * hi) {
        double mid = 0.5 * (lo + hi);
        if (low_p_failure_approx(n_d, d, mid, T) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace hqc
