#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hqc/analytic.hpp"
#include "hqc/code.hpp"
#include "hqc/complex.hpp"
#include "hqc/coxeter.hpp"
#include "hqc/decode.hpp"
#include "hqc/distance.hpp"
#include "hqc/json_io.hpp"
#include "hqc/sim.hpp"

namespace {

constexpr const char* kVersion = "hqc 1.0.0";

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw CLI::ValidationError("empty value list");
    return out;
}

struct BuildOpts {
    std::string family, out, in, relators;
    std::size_t L = 0, l = 1, max_cosets = 1000000;
    int r = 0, s = 0, qubit_level = -1;
    bool with_logicals = false, rotation = false;
};

int cmd_build(const BuildOpts& o) {
    hqc::ChainComplex c;
    if (o.family == "toric2d") {
        c = hqc::build_toric_2d(o.L);
    } else if (o.family == "rotated") {
        c = hqc::build_rotated_toric(o.L);
    } else if (o.family == "toric4d") {
        c = hqc::build_toric_4d(o.L);
    } else if (o.family == "tesseract") {
        c = hqc::build_tesseract(o.L);
    } else if (o.family == "hyperbolic" || o.family == "semihyperbolic") {
        if (!o.in.empty()) {
            c = hqc::complex_from_json(hqc::read_file(o.in));
        } else if (o.rotation) {
            std::vector<std::vector<int>> ws;
            for (const auto& w : hqc::parse_relator_list(o.relators))
                ws.push_back(hqc::to_rotation_word(w));
            auto table =
                hqc::enumerate_quotient(hqc::rotation_group(o.r, o.s), ws, o.max_cosets);
            if (!hqc::check_fixed_point_free_rotation(table, o.r, o.s))
                throw std::runtime_error("quotient is not fixed-point free");
            c = hqc::build_surface_complex_rotation(table, o.r, o.s);
        } else {
            auto extra = hqc::parse_relator_list(o.relators);
            auto table =
                hqc::enumerate_quotient(hqc::reflection_group(o.r, o.s), extra, o.max_cosets);
            if (!hqc::check_fixed_point_free(table, o.r, o.s))
                throw std::runtime_error("quotient is not fixed-point free");
            c = hqc::build_surface_complex(table, o.r, o.s);
        }
        if (o.family == "semihyperbolic") c = hqc::semi_hyperbolic(c, o.l);
    } else if (o.family == "appendix-a") {
        c = hqc::build_appendix_a_surface(o.r, o.L, o.max_cosets);
    } else if (o.family == "dual") {
        c = hqc::dual(hqc::complex_from_json(hqc::read_file(o.in)));
    } else {
        throw CLI::ValidationError("unknown family: " + o.family);
    }
    int ql = o.qubit_level >= 0 ? o.qubit_level : (c.dimension == 4 ? 2 : 1);
    hqc::CssCode code = hqc::CssCode::from_complex(c, ql);
    std::string text;
    if (o.with_logicals) {
        hqc::LogicalBasis lb = code.logical_basis();
        text = hqc::code_to_json(code, &lb);
    } else {
        text = hqc::code_to_json(code);
    }
    if (o.out.empty())
        std::cout << text;
    else
        hqc::write_file(o.out, text);
    return 0;
}

int cmd_params(const std::string& in, bool with_distance, bool with_count) {
    hqc::CssCode code = hqc::code_from_json(hqc::read_file(in));
    std::size_t k = code.compute_k();
    std::cout << "n=" << code.n() << " k=" << k;
    auto weight_range = [](const hqc::BitMatrix& m, bool rows_side) {
        std::size_t lo = std::size_t(-1), hi = 0;
        std::size_t count = rows_side ? m.rows() : m.cols();
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t w = rows_side ? m.row_weight(i) : m.col_weight(i);
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        }
        std::ostringstream ss;
        if (lo == hi)
            ss << lo;
        else
            ss << lo << ".." << hi;
        return ss.str();
    };
    std::cout << " w_Z=" << weight_range(code.h_z(), true)
              << " w_X=" << weight_range(code.h_x(), true);
    std::size_t deg_lo = std::size_t(-1), deg_hi = 0;
    for (std::size_t q = 0; q < code.n(); ++q) {
        std::size_t dg = code.h_x().col_weight(q) + code.h_z().col_weight(q);
        deg_lo = std::min(deg_lo, dg);
        deg_hi = std::max(deg_hi, dg);
    }
    std::cout << " deg=" << deg_lo;
    if (deg_hi != deg_lo) std::cout << ".." << deg_hi;
    if (with_distance && k >= 1) {
        hqc::LogicalBasis lb = code.logical_basis();
        if (with_count) {
            auto dz = hqc::count_min_weight_logicals(code, lb, hqc::Pauli::Z);
            auto dx = hqc::count_min_weight_logicals(code, lb, hqc::Pauli::X);
            std::cout << " d_Z=" << dz.d << " N_Z=" << dz.count << " d_X=" << dx.d
                      << " N_X=" << dx.count;
        } else {
            std::cout << " d_Z=" << hqc::z_distance(code, lb, false).d
                      << " d_X=" << hqc::x_distance(code, lb, false).d;
        }
    }
    std::cout << "\n";
    return 0;
}

struct SimOpts {
    std::string mode, in, out, p_list;
    double q = -1;
    std::size_t T = 0, m = 1, max_cycles = 1000, trials = 10000, d = 0;
    std::uint64_t seed = 1;
    int threads = 1;
};

int cmd_simulate(const SimOpts& o, const std::string& config_echo) {
    hqc::CssCode code = hqc::code_from_json(hqc::read_file(o.in));
    hqc::LogicalBasis lb = code.logical_basis();
    std::size_t k = code.compute_k();
    std::vector<double> ps = parse_list(o.p_list);
    bool memory = o.mode == "4d-toom" || o.mode == "4d-dklp";
    std::ostringstream csv;
    csv << "# config: " << kVersion << " " << config_echo << "\n";
    if (memory)
        csv << "family,n,k,d,p,q,T_rounds,trials,failures_logical,failures_stuck,"
               "mean_T,stderr,censored,seed\n";
    else
        csv << "family,n,k,d,p,q,T_rounds,trials,failures_logical,failures_stuck,"
               "p_bar,ci_lo,ci_hi,seed\n";
    for (double p : ps) {
        double q = o.q < 0 ? p : o.q;
        if (o.mode == "2d-perfect") {
            hqc::SimResult r = hqc::run_2d_perfect(code, lb, p, o.trials, o.seed, o.threads);
            csv << code.complex().family << "," << code.n() << "," << k << "," << o.d << ","
                << fmt(p) << "," << 0 << "," << 1 << "," << r.trials << ","
                << r.failures_logical << "," << r.failures_stuck << "," << fmt(r.p_bar) << ","
                << fmt(r.ci_lo) << "," << fmt(r.ci_hi) << "," << r.seed << "\n";
        } else if (o.mode == "2d-noisy") {
            std::size_t T = o.T ? o.T : std::max<std::size_t>(1, o.d);
            hqc::SimResult r = hqc::run_2d_noisy(code, lb, p, q, T, o.trials, o.seed, o.threads);
            csv << code.complex().family << "," << code.n() << "," << k << "," << o.d << ","
                << fmt(p) << "," << fmt(q) << "," << T << "," << r.trials << ","
                << r.failures_logical << "," << r.failures_stuck << "," << fmt(r.p_bar) << ","
                << fmt(r.ci_lo) << "," << fmt(r.ci_hi) << "," << r.seed << "\n";
        } else if (memory) {
            hqc::CaRule rule = o.mode == "4d-toom" ? hqc::CaRule::toom : hqc::CaRule::dklp;
            hqc::MemoryTimeResult r = hqc::run_4d_memory(code, lb, rule, p, o.q < 0 ? 0.0 : o.q,
                                                         o.m, o.max_cycles, o.trials, o.seed,
                                                         o.threads);
            csv << code.complex().family << "," << code.n() << "," << k << "," << o.d << ","
                << fmt(p) << "," << fmt(r.q) << "," << o.max_cycles << "," << r.trials << ","
                << r.failures_logical << "," << r.failures_stuck << "," << fmt(r.mean_T) << ","
                << fmt(r.stderr_T) << "," << r.censored << "," << r.seed << "\n";
        } else {
            throw CLI::ValidationError("unknown mode: " + o.mode);
        }
    }
    if (o.out.empty())
        std::cout << csv.str();
    else
        hqc::write_file(o.out, csv.str());
    return 0;
}

int cmd_fit(const std::string& in) {
    std::istringstream f(hqc::read_file(in));
    std::vector<hqc::FitPoint> data;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#' || line.find("p,") == 0) continue;
        std::stringstream ss(line);
        std::string tok;
        std::vector<double> vals;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
        if (vals.size() < 3) throw std::runtime_error("fit: need columns p,L,y[,sigma]");
        hqc::FitPoint pt;
        pt.p = vals[0];
        pt.L = vals[1];
        pt.y = vals[2];
        pt.sigma = vals.size() > 3 ? vals[3] : 1.0;
        data.push_back(pt);
    }
    hqc::FitResult r = hqc::fit_threshold(data);
    std::cout << "p_c=" << fmt(r.p_c) << " nu=" << fmt(r.nu) << " c0=" << fmt(r.coeffs[0])
              << " c1=" << fmt(r.coeffs[1]) << " c2=" << fmt(r.coeffs[2])
              << " residual=" << fmt(r.residual) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homological CSS code workbench"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::ostringstream config;
    for (int i = 1; i < argc; ++i) config << (i > 1 ? " " : "") << argv[i];

    BuildOpts b;
    auto* build = app.add_subcommand("build", "Construct a code artifact");
    build->add_option("family", b.family, "toric2d|rotated|toric4d|tesseract|hyperbolic|semihyperbolic|appendix-a|dual")
        ->required();
    build->add_option("--L", b.L, "lattice size");
    build->add_option("--l", b.l, "semi-hyperbolic subdivision");
    build->add_option("--r", b.r, "faces' side count");
    build->add_option("--s", b.s, "vertex degree");
    build->add_option("--relators", b.relators, "comma-separated relator words");
    build->add_flag("--rotation", b.rotation,
                    "enumerate in the orientation-preserving subgroup (for quotients whose "
                    "deck group is normal only there)");
    build->add_option("--in", b.in, "input artifact (dual, semihyperbolic)");
    build->add_option("--out", b.out, "output path (default stdout)");
    build->add_option("--qubit-level", b.qubit_level, "override qubit level");
    build->add_option("--max-cosets", b.max_cosets, "coset enumeration cap");
    build->add_flag("--logicals", b.with_logicals, "embed a logical basis");

    std::string params_in;
    bool with_distance = false, with_count = false;
    auto* params = app.add_subcommand("params", "Report code parameters");
    params->add_option("--in", params_in, "artifact path")->required();
    params->add_flag("--distance", with_distance, "compute d_Z and d_X");
    params->add_flag("--count", with_count, "also count minimum-weight logicals");

    SimOpts s;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo campaign");
    sim->add_option("--mode", s.mode, "2d-perfect|2d-noisy|4d-toom|4d-dklp")->required();
    sim->add_option("--in", s.in, "artifact path")->required();
    sim->add_option("--p", s.p_list, "comma-separated error rates")->required();
    sim->add_option("--q", s.q, "syndrome flip rate (default p for 2d-noisy, 0 for 4d)");
    sim->add_option("--T", s.T, "measurement rounds (default d)");
    sim->add_option("--m", s.m, "sweeps per cycle");
    sim->add_option("--max-cycles", s.max_cycles, "memory-time censoring horizon");
    sim->add_option("--trials", s.trials, "trials per point");
    sim->add_option("--seed", s.seed, "master seed");
    sim->add_option("--threads", s.threads, "worker threads");
    sim->add_option("--d", s.d, "distance column value (informational)");
    sim->add_option("--out", s.out, "output CSV (default stdout)");

    std::string fit_in;
    auto* fit = app.add_subcommand("fit", "Scaling-collapse threshold fit");
    fit->add_option("--in", fit_in, "CSV with columns p,L,y[,sigma]")->required();

    hqc::TessellationParams tp;
    auto* bounds = app.add_subcommand("bounds", "Analytic threshold lower bounds");
    bounds->add_option("--r", tp.r)->required();
    bounds->add_option("--s", tp.s)->required();
    bounds->add_option("--c", tp.c, "distance-scaling constant")->required();
    bounds->add_option("--n", tp.n, "edge count (adds rate and distance bound)");

    std::size_t a_nd = 0, a_d = 0, a_T = 1;
    double a_p = -1, a_target = -1;
    auto* approx = app.add_subcommand("approx", "Low-p failure approximation");
    approx->add_option("--nd", a_nd, "number of minimum-weight logicals")->required();
    approx->add_option("--d", a_d, "distance")->required();
    approx->add_option("--p", a_p, "error rate");
    approx->add_option("--T", a_T, "rounds");
    approx->add_option("--target", a_target, "solve for p_max at this failure rate");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*build) return cmd_build(b);
        if (*params) return cmd_params(params_in, with_distance, with_count);
        if (*sim) return cmd_simulate(s, config.str());
        if (*fit) return cmd_fit(fit_in);
        if (*bounds) {
            std::cout << "perfect " << fmt(100 * hqc::threshold_lower_bound(tp, false)) << "% "
                      << "noisy " << fmt(100 * hqc::threshold_lower_bound(tp, true)) << "%";
            if (tp.n) {
                std::cout << " rate " << fmt(hqc::encoding_rate(tp)) << " d_bound "
                          << fmt(hqc::distance_upper_bound(tp));
            }
            std::cout << "\n";
            return 0;
        }
        if (*approx) {
            if (a_target > 0)
                std::cout << "p_max=" << fmt(hqc::p_max(a_nd, a_d, a_T, a_target)) << "\n";
            else if (a_p >= 0)
                std::cout << fmt(hqc::low_p_failure_approx(a_nd, a_d, a_p, a_T)) << "\n";
            else
                throw CLI::ValidationError("approx: need --p or --target");
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
