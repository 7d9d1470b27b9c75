// Command-line front end: solve / quantize / verify / family pipelines with
// reproducible configs and machine-readable CSV/JSON output.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "nliouville/closed_forms.hpp"
#include "nliouville/pohozaev.hpp"
#include "nliouville/profile_io.hpp"
#include "nliouville/quantization.hpp"
#include "nliouville/radial_ode.hpp"
#include "nliouville/verify.hpp"

using namespace nliouville;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;

std::string default_outdir() {
    if (const char* env = std::getenv("NLIOUVILLE_OUTDIR")) return env;
    return ".";
}

// accepts "1", "1+0i", "-0.5-2i", "2i"
std::complex<double> parse_complex(const std::string& text) {
    double re = 0.0, im = 0.0;
    const auto ipos = text.find('i');
    if (ipos == std::string::npos) {
        re = std::stod(text);
        return {re, 0.0};
    }
    std::string body = text.substr(0, ipos);
    // split at the last +/- that is not a leading sign or exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') &&
            body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        im = body.empty() ? 1.0 : std::stod(body);
    } else {
        re = std::stod(body.substr(0, split));
        const std::string imtxt = body.substr(split);
        im = (imtxt == "+" || imtxt == "-") ? std::stod(imtxt + "1")
                                            : std::stod(imtxt);
    }
    return {re, im};
}

int cmd_solve(int n, double gamma, bool have_alpha0, double alpha0,
              const SolveConfig& cfg, const std::string& profile_out,
              const std::string& report_out, const std::string& format) {
    const auto dim = Dimension::of(n);
    RadialProfile profile;
    if (have_alpha0) {
        profile = solve_from_peak(alpha0, dim, cfg);
    } else if (gamma > 0.0) {
        profile = solve_from_peak(alpha0_from_gamma(gamma, dim), dim, cfg);
    } else if (gamma == 0.0) {
        // gamma = 0 has no peak construction; fall back to the closed form
        profile = sample_profile(ClosedFormFamily::entire(n, 1.0), cfg.r_min,
                                 cfg.r_max, cfg.points_per_decade);
    } else {
        throw std::invalid_argument(
            "solve: precondition gamma >= 0 violated (the peak construction "
            "covers gamma > 0; gamma = 0 uses the entire closed form)");
    }
    const auto rep = measure(profile);
    const double target = have_alpha0 ? rep.gamma_num : gamma;
    const bool pass =
        verify_quantization(rep, target, dim, 1e-3).pass();
    write_profile_csv(profile_out, profile);
    write_report_json(report_out, rep, pass);
    if (format == "json") {
        std::cout << report_to_json(rep, pass) << '\n';
    } else {
        std::printf("n=%d gamma_num=%.10g gamma_inf_num=%.10g "
                    "total_mass=%.10g eq921_residual=%.3g pass=%s\n",
                    rep.n, rep.gamma_num, rep.gamma_inf_num, rep.total_mass,
                    rep.eq921_residual, pass ? "true" : "false");
    }
    std::cerr << "wrote " << profile_out << " and " << report_out << '\n';
    return 0;
}

int cmd_quantize(int n, double gamma, bool theorem3, double alpha,
                 const std::string& format) {
    const auto dim = Dimension::of(n);
    if (theorem3) {
        const double m = theorem3_mass(alpha, dim);
        if (format == "json")
            std::printf("{\"n\": %d, \"alpha\": %.17g, \"theorem3_mass\": "
                        "%.17g}\n",
                        n, alpha, m);
        else
            std::printf("%.17g\n", m);
        return 0;
    }
    const double root = mass_equation_root(gamma, dim);
    const double resid = eq921_residual(gamma, root, dim);
    if (format == "json")
        std::printf("{\"n\": %d, \"gamma\": %.17g, \"gamma_inf\": %.17g, "
                    "\"residual\": %.3g}\n",
                    n, gamma, root, resid);
    else
        std::printf("%.17g\n", root);
    return 0;
}

int cmd_verify(const std::string& suite, int n_filter) {
    const auto results = verify::run_suites(suite, n_filter);
    bool all_pass = true;
    for (const auto& sr : results) {
        for (const auto& c : sr.checks) {
            std::printf("[%s] %-14s %-55s residual=%-12.4g tol=%.1g\n",
                        c.pass ? "PASS" : "FAIL", sr.name.c_str(),
                        c.name.c_str(), c.residual, c.tol);
            all_pass = all_pass && c.pass;
        }
    }
    std::printf("%s\n", all_pass ? "all checks passed" : "CHECKS FAILED");
    return all_pass ? 0 : kExitCheckFailed;
}

int cmd_family(const std::string& kind, int n, double alpha, double lambda,
               const std::string& c_text, bool have_r, double r_single,
               double r_min, double r_max, int ppd, int grid_n, double extent,
               const std::string& out) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.empty()) {
        file.open(out);
        if (!file) throw std::runtime_error("cannot open " + out);
        os = &file;
    }
    if (kind == "planar") {
        const auto f = ClosedFormFamily::planar(alpha, lambda,
                                                parse_complex(c_text));
        *os << "x,y,u\n";
        for (int i = 0; i < grid_n; ++i) {
            for (int j = 0; j < grid_n; ++j) {
                const double x = -extent + 2.0 * extent * i / (grid_n - 1);
                const double y = -extent + 2.0 * extent * j / (grid_n - 1);
                // the origin carries the |x|^{2 alpha} zero/pole; report the
                // limit instead of refusing the whole grid
                const double u =
                    (x == 0.0 && y == 0.0 && alpha != 0.0)
                        ? std::copysign(HUGE_VAL, -alpha)
                        : eval_planar(f, x, y);
                char row[128];
                std::snprintf(row, sizeof(row), "%.17g,%.17g,%.17g\n", x, y,
                              u);
                *os << row;
            }
        }
        return 0;
    }
    const auto f = (kind == "entire")
                       ? ClosedFormFamily::entire(n, lambda)
                       : ClosedFormFamily::singular_radial(n, alpha, lambda);
    if (have_r) {
        const double u = (kind == "entire") ? eval_entire(f, r_single)
                                            : eval_singular_radial(f, r_single);
        char row[64];
        std::snprintf(row, sizeof(row), "r,U\n%.17g,%.17g\n", r_single, u);
        *os << row;
        return 0;
    }
    write_profile_csv(*os, sample_profile(f, r_min, r_max, ppd));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial solutions, mass quantization and Pohozaev checks "
                 "for the singular n-Liouville equation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a TOML config file");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    // solve
    auto* solve = app.add_subcommand(
        "solve", "solve from the peak and measure masses and slopes");
    int s_n = 2;
    double s_gamma = NAN, s_alpha0 = NAN;
    SolveConfig s_cfg;
    std::string s_profile_out, s_report_out, s_format = "text", s_outdir;
    solve->add_option("--n", s_n, "ambient dimension (n >= 2)");
    auto* gopt = solve->add_option("--gamma", s_gamma,
                                   "Dirac mass at the origin (gamma >= 0)");
    auto* aopt =
        solve->add_option("--alpha0", s_alpha0, "peak height U(1) = alpha0");
    gopt->excludes(aopt);
    solve->add_option("--rmin", s_cfg.r_min, "inner truncation radius");
    solve->add_option("--rmax", s_cfg.r_max, "outer truncation radius");
    solve->add_option("--rtol", s_cfg.rel_tol, "relative integrator tolerance");
    solve->add_option("--atol", s_cfg.abs_tol, "absolute integrator tolerance");
    solve->add_option("--ppd", s_cfg.points_per_decade,
                      "output grid points per decade");
    solve->add_option("--profile-out", s_profile_out, "profile CSV path");
    solve->add_option("--report-out", s_report_out, "report JSON path");
    solve->add_option("--outdir", s_outdir,
                      "output directory for default file names");
    solve->add_option("--format", s_format, "stdout format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // quantize
    auto* quant = app.add_subcommand(
        "quantize", "solve the scalar mass equation / evaluate the "
                    "weighted-family mass");
    int q_n = 2;
    double q_gamma = 0.0, q_alpha = 0.0;
    bool q_theorem3 = false;
    std::string q_format = "text";
    quant->add_option("--n", q_n, "ambient dimension");
    quant->add_option("--gamma", q_gamma, "Dirac mass at the origin");
    quant->add_flag("--theorem3", q_theorem3,
                    "evaluate the weighted-family mass instead");
    quant->add_option("--alpha", q_alpha, "weight exponent (with --theorem3)");
    quant->add_option("--format", q_format, "stdout format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::string v_suite = "all";
    int v_n = 0;
    ver->add_option("--suite", v_suite, "suite name or 'all'");
    ver->add_option("--n", v_n, "restrict sweep suites to one dimension");

    // family
    auto* fam = app.add_subcommand("family",
                                   "sample a closed-form solution family");
    std::string f_kind = "entire", f_c = "0", f_out;
    int f_n = 2, f_ppd = 50, f_grid = 101;
    double f_alpha = 0.0, f_lambda = 1.0, f_r = NAN;
    double f_rmin = 1e-4, f_rmax = 1e4, f_extent = 3.0;
    fam->add_option("--kind", f_kind, "entire | singular | planar")
        ->check(CLI::IsMember({"entire", "singular", "planar"}));
    fam->add_option("--n", f_n, "ambient dimension (radial kinds)");
    fam->add_option("--alpha", f_alpha, "weight exponent");
    fam->add_option("--lambda", f_lambda, "scale parameter");
    fam->add_option("--c", f_c, "complex parameter, e.g. 1+0i (planar)");
    auto* ropt = fam->add_option("--r", f_r, "evaluate at a single radius");
    fam->add_option("--rmin", f_rmin, "grid start (radial kinds)");
    fam->add_option("--rmax", f_rmax, "grid end (radial kinds)");
    fam->add_option("--ppd", f_ppd, "grid points per decade");
    fam->add_option("--grid", f_grid, "grid points per axis (planar)");
    fam->add_option("--extent", f_extent, "half-width of the square (planar)");
    fam->add_option("--out", f_out, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*solve) {
            const bool have_a = aopt->count() > 0;
            if (!have_a && gopt->count() == 0)
                throw std::invalid_argument(
                    "solve: one of --gamma or --alpha0 is required");
            std::string outdir =
                s_outdir.empty() ? default_outdir() : s_outdir;
            if (s_profile_out.empty())
                s_profile_out = outdir + "/profile.csv";
            if (s_report_out.empty()) s_report_out = outdir + "/report.json";
            return cmd_solve(s_n, s_gamma, have_a, s_alpha0, s_cfg,
                             s_profile_out, s_report_out, s_format);
        }
        if (*quant)
            return cmd_quantize(q_n, q_gamma, q_theorem3, q_alpha, q_format);
        if (*ver) return cmd_verify(v_suite, v_n);
        if (*fam)
            return cmd_family(f_kind, f_n, f_alpha, f_lambda, f_c,
                              ropt->count() > 0, f_r, f_rmin, f_rmax, f_ppd,
                              f_grid, f_extent, f_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    return 0;
}
