#include "hqc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include "hqc/analytic.hpp"
#include "hqc/rng.hpp"

namespace hqc {

namespace {

// Inverse standard normal CDF (Acklam's rational approximation).
double normal_quantile(double p) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("normal_quantile: p in (0,1)");
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    } else if (p <= phigh) {
        double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    } else {
        double q = std::sqrt(-2 * std::log(1 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    return x;
}

template <class F>
void parallel_trials(std::size_t trials, int threads, F&& per_trial) {
    if (threads < 1) threads = 1;
    if (threads == 1) {
        for (std::size_t t = 0; t < trials; ++t) per_trial(t);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (trials + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        std::size_t lo = std::size_t(w) * chunk, hi = std::min(trials, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &per_trial] {
            for (std::size_t t = lo; t < hi; ++t) per_trial(t);
        });
    }
    for (auto& th : pool) th.join();
}

// A zero-syndrome residual is a nontrivial class iff it anticommutes with
// some logical of the opposite type.
bool pairs_nontrivially(const BitVector& residual, const std::vector<BitVector>& opposite) {
    for (const BitVector& op : opposite)
        if (residual.dot(op)) return true;
    return false;
}

}  // namespace

std::pair<double, double> wilson_interval(std::size_t failures, std::size_t trials,
                                          double confidence) {
    if (trials < 1 || failures > trials) throw std::invalid_argument("wilson_interval: bad counts");
    double z = normal_quantile(0.5 + confidence / 2.0);
    double n = double(trials), f = double(failures);
    double phat = f / n, z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = z / denom * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SimResult run_2d_perfect(const CssCode& code, const LogicalBasis& logicals, double p,
                         std::size_t trials, std::uint64_t seed, int threads) {
    MatchingDecoder2D dec(code);
    std::size_t n = code.n();
    if (threads < 1) threads = 1;
    std::vector<std::size_t> fz(threads, 0), fx(threads, 0), fany(threads, 0);
    std::size_t per_thread = (trials + threads - 1) / threads;

    auto side_fails = [&](std::mt19937_64& rng, Pauli side,
                          const std::vector<BitVector>& opposite) {
        std::vector<std::size_t> flips = sample_flips(rng, n, p);
        if (flips.empty()) return false;
        BitVector e = BitVector::from_ones(n, flips);
        BitVector syn = dec.code().syndrome(e, side);
        BitVector residual = e;
        if (!syn.is_zero()) residual ^= dec.decode(syn, side);
        return pairs_nontrivially(residual, opposite);
    };
    parallel_trials(trials, threads, [&](std::size_t t) {
        std::size_t w = std::min(t / per_thread, std::size_t(threads) - 1);
        std::mt19937_64 rng = trial_rng(seed, t);
        bool z_fail = side_fails(rng, Pauli::Z, logicals.x_ops);
        bool x_fail = side_fails(rng, Pauli::X, logicals.z_ops);
        if (z_fail) fz[w]++;
        if (x_fail) fx[w]++;
        if (z_fail || x_fail) fany[w]++;
    });
    SimResult res;
    res.trials = trials;
    res.p = p;
    res.seed = seed;
    for (int w = 0; w < threads; ++w) {
        res.failures_z += fz[w];
        res.failures_x += fx[w];
        res.failures_logical += fany[w];
    }
    res.p_bar = trials ? double(res.failures_logical) / double(trials) : 0.0;
    std::tie(res.ci_lo, res.ci_hi) = wilson_interval(res.failures_logical, trials);
    return res;
}

SimResult run_2d_noisy(const CssCode& code, const LogicalBasis& logicals, double p, double q,
                       std::size_t T, std::size_t trials, std::uint64_t seed, int threads) {
    if (T < 1) throw std::invalid_argument("run_2d_noisy: T must be >= 1");
    MatchingDecoder2D dec(code);
    std::size_t n = code.n();
    if (threads < 1) threads = 1;
    std::vector<std::size_t> fz(threads, 0), fx(threads, 0), fany(threads, 0);
    std::size_t per_thread = (trials + threads - 1) / threads;

    auto side_fails = [&](std::mt19937_64& rng, Pauli side,
                          const std::vector<BitVector>& opposite) {
        std::size_t nchecks =
            side == Pauli::Z ? dec.code().h_x().rows() : dec.code().h_z().rows();
        SpacetimeSyndrome st;
        st.T = T;
        st.rounds.assign(T + 2, BitVector(nchecks));
        BitVector acc(n);
        for (std::size_t t = 1; t <= T; ++t) {
            for (std::size_t i : sample_flips(rng, n, p)) acc.flip(i);
            BitVector syn = dec.code().syndrome(acc, side);
            for (std::size_t i : sample_flips(rng, nchecks, q)) syn.flip(i);
            st.rounds[t] = std::move(syn);
        }
        st.rounds[T + 1] = dec.code().syndrome(acc, side);
        if (acc.is_zero() && st.rounds[T + 1].is_zero()) {
            bool all_zero = true;
            for (std::size_t t = 1; t <= T && all_zero; ++t) all_zero = st.rounds[t].is_zero();
            if (all_zero) return false;
        }
        BitVector residual = acc;
        residual ^= dec.decode_noisy(st, side);
        if (!dec.code().syndrome(residual, side).is_zero())
            throw std::logic_error("run_2d_noisy: correction syndrome mismatch");
        return pairs_nontrivially(residual, opposite);
    };
    parallel_trials(trials, threads, [&](std::size_t t) {
        std::size_t w = std::min(t / per_thread, std::size_t(threads) - 1);
        std::mt19937_64 rng = trial_rng(seed, t);
        bool z_fail = side_fails(rng, Pauli::Z, logicals.x_ops);
        bool x_fail = side_fails(rng, Pauli::X, logicals.z_ops);
        if (z_fail) fz[w]++;
        if (x_fail) fx[w]++;
        if (z_fail || x_fail) fany[w]++;
    });
    SimResult res;
    res.trials = trials;
    res.p = p;
    res.q = q;
    res.T = T;
    res.seed = seed;
    for (int w = 0; w < threads; ++w) {
        res.failures_z += fz[w];
        res.failures_x += fx[w];
        res.failures_logical += fany[w];
    }
    res.p_bar = trials ? double(res.failures_logical) / double(trials) : 0.0;
    std::tie(res.ci_lo, res.ci_hi) = wilson_interval(res.failures_logical, trials);
    res.p_round = hqc::p_round(res.p_bar, T);
    return res;
}

MemoryTimeResult run_4d_memory(const CssCode& code, const LogicalBasis& logicals, CaRule rule,
                               double p, double q, std::size_t m, std::size_t max_cycles,
                               std::size_t trials, std::uint64_t seed, int threads) {
    const ChainComplex& c = code.complex();
    if (c.dimension != 4 || code.qubit_level() != 2)
        throw std::invalid_argument("run_4d_memory: need a 4D code with qubits on faces");
    std::size_t L = 2;
    while (L * L * L * L < c.level_sizes[0]) ++L;
    if (L * L * L * L != c.level_sizes[0])
        throw std::invalid_argument("run_4d_memory: not a hypercubic 4-torus");
    Toric4dGeometry geom(L);
    if (geom.num_faces != code.n())
        throw std::invalid_argument("run_4d_memory: face count mismatch");
    std::size_t v_max = 10 * L;

    MemoryTimeResult res;
    res.trials = trials;
    res.times.assign(trials, 0);
    res.p = p;
    res.q = q;
    res.m_sweeps = m;
    res.max_cycles = max_cycles;
    res.seed = seed;
    std::vector<std::uint8_t> cls(trials, 0);  // 0 censored, 1 logical, 2 stuck

    parallel_trials(trials, threads, [&](std::size_t t) {
        std::mt19937_64 rng = trial_rng(seed, t);
        CaGrid4D grid(geom);
        BitVector noise(geom.num_edges);
        for (std::size_t cycle = 1; cycle <= max_cycles; ++cycle) {
            for (std::size_t f : sample_flips(rng, geom.num_faces, p))
                geom.flip_face(f, grid.error, grid.syndrome);
            const BitVector* mask = nullptr;
            if (q > 0) {
                noise = BitVector(geom.num_edges);
                for (std::size_t e : sample_flips(rng, geom.num_edges, q)) noise.flip(e);
                mask = &noise;
            }
            for (std::size_t s = 0; s < m; ++s) {
                if (rule == CaRule::toom)
                    toom_sweep(geom, grid, mask);
                else
                    dklp_sweep(geom, grid, rng, mask);
            }
            // Snapshot check with perfect syndrome.
            CaGrid4D snap = grid;
            std::size_t best = snap.syndrome.weight(), since = 0;
            std::uint8_t verdict = 0;
            while (true) {
                if (snap.syndrome.is_zero()) {
                    verdict = pairs_nontrivially(snap.error, logicals.x_ops) ? 1 : 0;
                    break;
                }
                if (rule == CaRule::toom)
                    toom_sweep(geom, snap);
                else
                    dklp_sweep(geom, snap, rng);
                std::size_t wgt = snap.syndrome.weight();
                if (wgt < best) {
                    best = wgt;
                    since = 0;
                } else if (++since >= v_max) {
                    verdict = 2;
                    break;
                }
            }
            if (verdict != 0) {
                res.times[t] = cycle;
                cls[t] = verdict;
                return;
            }
            res.times[t] = cycle;
        }
        cls[t] = 0;  // survived to max_cycles (censored)
    });
    double sum = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        sum += double(res.times[t]);
        if (cls[t] == 0)
            res.censored++;
        else if (cls[t] == 1)
            res.failures_logical++;
        else
            res.failures_stuck++;
    }
    res.mean_T = trials ? sum / double(trials) : 0.0;
    double var = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        double dlt = double(res.times[t]) - res.mean_T;
        var += dlt * dlt;
    }
    if (trials > 1) res.stderr_T = std::sqrt(var / double(trials - 1) / double(trials));
    return res;
}

FitResult fit_threshold(const std::vector<FitPoint>& data) {
    std::set<double> ls, ps;
    for (const FitPoint& d : data) {
        ls.insert(d.L);
        ps.insert(d.p);
    }
    if (ls.size() < 2) throw std::invalid_argument("fit_threshold: need >= 2 distinct L");
    if (ps.size() < 3) throw std::invalid_argument("fit_threshold: need >= 3 distinct p");

    auto solve_inner = [&](double p_c, double nu, std::array<double, 3>& coef) {
        // Weighted least squares for y = c0 + c1 x + c2 x^2.
        double ata[3][3] = {}, atb[3] = {};
        for (const FitPoint& d : data) {
            double x = (d.p - p_c) * std::pow(d.L, 1.0 / nu);
            double w = 1.0 / (d.sigma * d.sigma);
            double basis[3] = {1.0, x, x * x};
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) ata[i][j] += w * basis[i] * basis[j];
                atb[i] += w * basis[i] * d.y;
            }
        }
        // Gaussian elimination with partial pivoting.
        double m[3][4];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) m[i][j] = ata[i][j];
            m[i][3] = atb[i];
        }
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int r = col + 1; r < 3; ++r)
                if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
            std::swap(m[col], m[piv]);
            if (std::fabs(m[col][col]) < 1e-300) return 1e300;
            for (int r = 0; r < 3; ++r) {
                if (r == col) continue;
                double fac = m[r][col] / m[col][col];
                for (int j = col; j < 4; ++j) m[r][j] -= fac * m[col][j];
            }
        }
        for (int i = 0; i < 3; ++i) coef[i] = m[i][3] / m[i][i];
        double chi2 = 0;
        for (const FitPoint& d : data) {
            double x = (d.p - p_c) * std::pow(d.L, 1.0 / nu);
            double model = coef[0] + coef[1] * x + coef[2] * x * x;
            double r = (d.y - model) / d.sigma;
            chi2 += r * r;
        }
        return chi2;
    };

    double p_lo = *ps.begin(), p_hi = *ps.rbegin();
    double nu_lo = 0.4, nu_hi = 2.5;
    FitResult best;
    best.residual = 1e300;
    for (int round = 0; round < 4; ++round) {
        int steps = round == 0 ? 60 : 20;
        FitResult local = best;
        for (int i = 0; i <= steps; ++i)
            for (int j = 0; j <= steps; ++j) {
                double p_c = p_lo + (p_hi - p_lo) * i / steps;
                double nu = nu_lo + (nu_hi - nu_lo) * j / steps;
                std::array<double, 3> coef;
                double chi2 = solve_inner(p_c, nu, coef);
                if (chi2 < local.residual) {
                    local.p_c = p_c;
                    local.nu = nu;
                    local.coeffs = coef;
                    local.residual = chi2;
                }
            }
        best = local;
        double pw = (p_hi - p_lo) / steps * 2, nw = (nu_hi - nu_lo) / steps * 2;
        p_lo = best.p_c - pw;
        p_hi = best.p_c + pw;
        nu_lo = std::max(0.1, best.nu - nw);
        nu_hi = best.nu + nw;
    }
    return best;
}

std::vector<double> crossing_points(const std::vector<std::pair<double, double>>& a,
                                    const std::vector<std::pair<double, double>>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("crossing_points: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first)
            throw std::invalid_argument("crossing_points: p grids differ");
    std::vector<double> out;
    // Strict sign changes interpolate; a run of exact ties counts as one
    // crossing at the run midpoint, and only if the signs on either side
    // differ (so flat coincident stretches, e.g. two censored curves, are
    // not crossings).
    std::ptrdiff_t last = -1;  // index of last nonzero difference
    for (std::size_t i = 0; i < a.size(); ++i) {
        double di = a[i].second - b[i].second;
        if (di == 0.0) continue;
        if (last >= 0) {
            double dl = a[last].second - b[last].second;
            if ((dl < 0) != (di < 0)) {
                if (std::size_t(last) + 1 == i)
                    out.push_back(a[last].first +
                                  (a[i].first - a[last].first) * (-dl) / (di - dl));
                else
                    out.push_back((a[last + 1].first + a[i - 1].first) / 2.0);
            }
        }
        last = std::ptrdiff_t(i);
    }
    if (!a.empty() && a.back().second == b.back().second) out.push_back(a.back().first);
    return out;
}

}  // namespace hqc
