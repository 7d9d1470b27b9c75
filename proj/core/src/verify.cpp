#include "nliouville/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "nliouville/closed_forms.hpp"
#include "nliouville/pohozaev.hpp"
#include "nliouville/quantization.hpp"
#include "nliouville/radial_ode.hpp"

namespace nliouville::verify {

namespace {

Check rel_check(std::string name, double measured, double expected,
                double tol) {
    const double resid =
        std::fabs(measured - expected) / std::max(std::fabs(expected), 1e-300);
    return {std::move(name), resid, tol, resid <= tol};
}

Check bound_check(std::string name, double residual, double tol) {
    return {std::move(name), residual, tol, residual <= tol};
}

// a check that must FAIL its tolerance (negative control)
Check must_exceed(std::string name, double residual, double tol) {
    return {std::move(name), residual, tol, residual > tol};
}

struct SweepCase {
    int n;
    double gamma;
    RadialProfile profile;
    MassReport rep;
};

std::vector<SweepCase> quantization_sweep(int n_filter) {
    std::vector<SweepCase> cases;
    const double gammas[] = {0.5, M_PI, 8.0 * M_PI, 50.0};
    for (int n : {2, 3, 4}) {
        if (n_filter != 0 && n != n_filter) continue;
        const auto dim = Dimension::of(n);
        for (double g : gammas) {
            if (g == 0.5 && n == 4) continue;
            SweepCase sc;
            sc.n = n;
            sc.gamma = g;
            sc.profile = solve_from_peak(alpha0_from_gamma(g, dim), dim);
            sc.rep = measure(sc.profile);
            cases.push_back(std::move(sc));
        }
    }
    return cases;
}

std::string tag(int n, double gamma) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "n=%d gamma=%.6g", n, gamma);
    return buf;
}

} // namespace

bool SuiteResult::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double SuiteResult::worst_margin() const {
    double w = 0.0;
    for (const auto& c : checks)
        if (c.tol > 0.0) w = std::max(w, c.residual / c.tol);
    return w;
}

SuiteResult suite_entire_mass() {
    SuiteResult sr{"entire_mass", {}};
    const auto f = ClosedFormFamily::entire(2, 1.0);
    sr.checks.push_back(rel_check("entire n=2 total mass = 8 pi",
                                  family_total_mass(f), 8.0 * M_PI, 1e-6));
    // mass accumulator of a sampled profile must agree with the quadrature
    const auto prof = sample_profile(f, 1e-8, 1e8, 64);
    const auto rep = measure(prof);
    sr.checks.push_back(rel_check("entire n=2 sampled-profile mass",
                                  rep.total_mass, 8.0 * M_PI, 1e-6));
    return sr;
}

SuiteResult suite_quantization(int n_filter) {
    SuiteResult sr{"quantization", {}};
    for (const auto& sc : quantization_sweep(n_filter)) {
        const auto dim = Dimension::of(sc.n);
        const auto v = verify_quantization(sc.rep, sc.gamma, dim, 1e-3);
        sr.checks.push_back(bound_check(tag(sc.n, sc.gamma) + " gamma_num",
                                        v.gamma_resid, 1e-3));
        sr.checks.push_back(bound_check(tag(sc.n, sc.gamma) + " gamma_inf_num",
                                        v.gamma_inf_resid, 1e-3));
        sr.checks.push_back(bound_check(tag(sc.n, sc.gamma) +
                                            " total = gamma + gamma_inf",
                                        v.mass_resid, 1e-3));
    }
    return sr;
}

SuiteResult suite_root_law() {
    SuiteResult sr{"root_law", {}};
    const auto dim = Dimension::of(2);
    const double lo = -4.0 * M_PI + 0.01, hi = 100.0;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double g = lo + (hi - lo) * i / 199.0;
        worst = std::max(
            worst, std::fabs(mass_equation_root(g, dim) - (g + 8.0 * M_PI)));
    }
    sr.checks.push_back(bound_check(
        "n=2: max |root(gamma) - (gamma + 8 pi)| over 200 gammas", worst,
        1e-10));
    return sr;
}

SuiteResult suite_theorem3() {
    SuiteResult sr{"theorem3", {}};
    double worst_invariance = 0.0;
    for (int n : {2, 3}) {
        const auto dim = Dimension::of(n);
        for (double a : {-0.5, 0.0, 1.0, 2.5}) {
            const double expected = theorem3_mass(a, dim);
            double worst = 0.0;
            const double m1 = family_total_mass(
                ClosedFormFamily::singular_radial(n, a, 1.0));
            for (double lam : {0.5, 1.0, 3.0}) {
                const double m = family_total_mass(
                    ClosedFormFamily::singular_radial(n, a, lam));
                worst = std::max(worst,
                                 std::fabs(m - expected) / expected);
                worst_invariance =
                    std::max(worst_invariance, std::fabs(m - m1) / m1);
            }
            char name[64];
            std::snprintf(name, sizeof(name),
                          "n=%d alpha=%.2g weighted mass", n, a);
            sr.checks.push_back(bound_check(name, worst, 1e-6));
        }
    }
    sr.checks.push_back(bound_check("lambda invariance of the weighted mass",
                                    worst_invariance, 1e-10));
    return sr;
}

SuiteResult suite_pohozaev() {
    SuiteResult sr{"pohozaev", {}};
    struct Case {
        ClosedFormFamily f;
        std::string name;
    };
    const std::vector<Case> cases = {
        {ClosedFormFamily::entire(2, 1.0), "entire n=2"},
        {ClosedFormFamily::entire(3, 1.0), "entire n=3"},
        {ClosedFormFamily::singular_radial(2, 1.0, 1.0), "singular n=2 a=1"},
        {ClosedFormFamily::singular_radial(3, 1.0, 1.0), "singular n=3 a=1"},
        {ClosedFormFamily::singular_radial(2, -0.5, 1.0),
         "singular n=2 a=-0.5"},
        {ClosedFormFamily::singular_radial(3, 2.5, 1.0), "singular n=3 a=2.5"},
    };
    std::mt19937 rng(20260823);
    for (const auto& cs : cases) {
        const auto prof = sample_profile(cs.f, 1e-6, 1e6, 320);
        const std::size_t m = prof.size();
        std::uniform_int_distribution<std::size_t> inner(0, m / 3);
        std::uniform_int_distribution<std::size_t> outer(2 * m / 3, m - 1);
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
            std::size_t lo = inner(rng), hi = outer(rng);
            if ((hi - lo) % 2 == 1) --hi; // even panel count for Richardson
            const auto ch = check_annulus(prof, cs.f.alpha, prof.grid[lo],
                                          prof.grid[hi], cs.f.dim);
            worst = std::max(worst,
                             std::fabs(ch.residual) /
                                 std::fabs(ch.interior_integral));
        }
        sr.checks.push_back(
            bound_check(cs.name + " annulus residual (10 annuli)", worst,
                        1e-5));
    }

    // boundary functional limits against the measured masses
    for (auto [n, g] : {std::pair<int, double>{2, 8.0 * M_PI}, {3, 10.0}}) {
        const auto dim = Dimension::of(n);
        const auto prof = solve_from_peak(alpha0_from_gamma(g, dim), dim);
        const auto rep = measure(prof);
        const double kconst = (n - 1.0) / n *
                              std::pow(dim.sphere_area(), -1.0 / (n - 1.0));
        const double lim0 =
            kconst * std::pow(std::fabs(rep.gamma_num), n / (n - 1.0));
        const double liminf =
            kconst * std::pow(std::fabs(rep.gamma_inf_num), n / (n - 1.0));
        double dev0 = 0.0, devinf = 0.0;
        for (std::size_t i = 0; i < prof.size(); ++i) {
            if (prof.grid[i] <= 10.0 * prof.grid.front()) {
                const double b =
                    boundary_functional(prof, 0.0, prof.grid[i], dim);
                dev0 = std::max(dev0, std::fabs(b - lim0) / lim0);
            }
            if (prof.grid[i] >= prof.grid.back() / 10.0) {
                const double b =
                    boundary_functional(prof, 0.0, prof.grid[i], dim);
                devinf = std::max(devinf, std::fabs(b - liminf) / liminf);
            }
        }
        sr.checks.push_back(bound_check(
            tag(n, g) + " boundary limit at origin", dev0, 1e-3));
        sr.checks.push_back(bound_check(
            tag(n, g) + " boundary limit at infinity", devinf, 1e-3));
    }
    return sr;
}

SuiteResult suite_asymptotics(int n_filter) {
    SuiteResult sr{"asymptotics", {}};
    for (const auto& sc : quantization_sweep(n_filter)) {
        const auto dim = Dimension::of(sc.n);
        const double s0 = gamma_to_slope(sc.gamma, dim);
        const double sinf =
            -gamma_to_slope(mass_equation_root(sc.gamma, dim), dim);
        sr.checks.push_back(bound_check(
            tag(sc.n, sc.gamma) + " origin slope",
            std::fabs(sc.rep.slope_origin - s0) / std::fabs(s0), 1e-3));
        sr.checks.push_back(bound_check(
            tag(sc.n, sc.gamma) + " infinity slope",
            std::fabs(sc.rep.slope_infinity - sinf) / std::fabs(sinf), 1e-3));
        const auto kel = kelvin_transform(sc.profile);
        const auto ks = asymptotic_slope(kel, ProfileEnd::Origin);
        sr.checks.push_back(bound_check(
            tag(sc.n, sc.gamma) + " Kelvin slope exchange",
            std::fabs(ks.slope + sc.rep.slope_infinity) /
                std::fabs(sc.rep.slope_infinity),
            1e-12));
    }
    return sr;
}

SuiteResult suite_picard() {
    SuiteResult sr{"picard", {}};
    const double M = 2.0;
    std::mt19937 rng(715517);
    std::uniform_real_distribution<double> ur0(1.0 / M, M);
    std::uniform_real_distribution<double> ua0(-M, M);
    std::uniform_real_distribution<double> ua1(1.0 / M, M);
    double worst_q = 0.0, worst_sup = 0.0;
    for (int draw = 0; draw < 50; ++draw) {
        const int n = (draw % 2 == 0) ? 2 : 3;
        const auto dim = Dimension::of(n);
        const double r0 = ur0(rng);
        const double a0 = ua0(rng);
        const double a1 = ua1(rng) * ((rng() & 1) ? 1.0 : -1.0);
        const auto pr = picard_local_solve(r0, a0, a1, dim, 200, M);
        for (double q : pr.contraction_factors)
            worst_q = std::max(worst_q, q);
        // compare against the adaptive RK solution on a subsample
        std::vector<double> radii;
        for (std::size_t j = 0; j < pr.grid.size(); j += 16)
            radii.push_back(pr.grid[j]);
        const auto rk = integrate_cauchy(r0, a0, a1, dim, radii);
        for (std::size_t k = 0; k < radii.size(); ++k)
            worst_sup =
                std::max(worst_sup, std::fabs(rk[k] - pr.U[16 * k]));
    }
    sr.checks.push_back(bound_check(
        "empirical contraction factor over 50 draws", worst_q, 1.0 - 1e-12));
    sr.checks.push_back(bound_check(
        "fixed point vs RK sup-distance over 50 draws", worst_sup, 1e-8));
    return sr;
}

SuiteResult suite_planar() {
    SuiteResult sr{"planar", {}};
    const auto f = ClosedFormFamily::planar(1.0, 1.0, {1.0, 0.0});
    auto u = [&](double x, double y) { return eval_planar(f, x, y); };
    std::mt19937 rng(424243);
    std::uniform_real_distribution<double> ulogr(std::log(0.3), std::log(3.0));
    std::uniform_real_distribution<double> uth(0.0, 2.0 * M_PI);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double r = std::exp(ulogr(rng)), th = uth(rng);
        worst = std::max(worst,
                         std::fabs(planar_laplacian_residual(
                             u, r * std::cos(th), r * std::sin(th), 2e-4)));
    }
    sr.checks.push_back(bound_check(
        "planar a=1 c=1 PDE residual at 50 points", worst, 1e-4));
    for (double a : {1.0, 2.0}) {
        for (double cre : {0.0, 1.0}) {
            const auto fam = ClosedFormFamily::planar(a, 1.0, {cre, 0.0});
            char name[64];
            std::snprintf(name, sizeof(name),
                          "planar a=%.0f c=%.0f mass = 8 pi (a+1)", a, cre);
            sr.checks.push_back(rel_check(name, planar_total_mass(fam),
                                          8.0 * M_PI * (a + 1.0), 1e-3));
        }
    }
    return sr;
}

SuiteResult suite_negative_controls() {
    SuiteResult sr{"negative_controls", {}};
    const auto dim2 = Dimension::of(2);

    // corrupted mass report must fail the quantization verdict
    auto prof = sample_profile(ClosedFormFamily::entire(2, 1.0), 1e-8, 1e8, 64);
    auto rep = measure(prof);
    rep.total_mass *= 0.5;
    const auto v = verify_quantization(rep, 0.0, dim2, 1e-3);
    sr.checks.push_back(must_exceed("halved total_mass rejected",
                                    v.mass_resid, 1e-3));
    sr.checks.push_back(
        bound_check("corrupted report fails overall", v.pass() ? 1.0 : 0.0,
                    0.5));

    // U = -r is not a solution: annulus identity must not balance.
    // (U == const is no control here: constants satisfy the dilation
    // identity exactly, so the residual would vanish.)
    RadialProfile ramp;
    ramp.dim = dim2;
    for (int k = -200; k <= 200; ++k)
        ramp.grid.push_back(std::pow(10.0, k / 100.0));
    const std::size_t nr = ramp.grid.size();
    ramp.U.resize(nr);
    ramp.rUprime.resize(nr);
    ramp.mass_cum.assign(nr, 0.0);
    for (std::size_t i = 0; i < nr; ++i) {
        ramp.U[i] = -ramp.grid[i];
        ramp.rUprime[i] = -ramp.grid[i];
    }
    auto gfun = [&](double s) {
        const double r = std::exp(s);
        return dim2.sphere_area() * r * r * std::exp(-r);
    };
    for (std::size_t i = 1; i < nr; ++i) {
        const double s0 = std::log(ramp.grid[i - 1]);
        const double s1 = std::log(ramp.grid[i]);
        const double sm = 0.5 * (s0 + s1);
        ramp.mass_cum[i] =
            ramp.mass_cum[i - 1] +
            (s1 - s0) / 6.0 * (gfun(s0) + 4.0 * gfun(sm) + gfun(s1));
    }
    const auto ch = check_annulus(ramp, 0.0, 0.1, 10.0, dim2);
    sr.checks.push_back(must_exceed(
        "U=-r annulus residual nonzero",
        std::fabs(ch.residual) / std::fabs(ch.interior_integral), 1e-3));

    // U == 0 PDE residual is exactly -1 at r = 1
    const double res = radial_n_laplacian_residual(
        [](double) { return 0.0; }, dim2, 0.0, 1.0, 1e-4);
    sr.checks.push_back(must_exceed("U==0 PDE residual nonzero",
                                    std::fabs(res), 0.5));
    return sr;
}

std::vector<std::string> suite_names() {
    return {"entire_mass", "quantization", "root_law",
            "theorem3",    "pohozaev",     "asymptotics",
            "picard",      "planar",       "negative_controls"};
}

std::vector<SuiteResult> run_suites(const std::string& name, int n_filter) {
    std::vector<SuiteResult> out;
    auto want = [&](const char* s) { return name == "all" || name == s; };
    if (want("entire_mass")) out.push_back(suite_entire_mass());
    if (want("quantization")) out.push_back(suite_quantization(n_filter));
    if (want("root_law")) out.push_back(suite_root_law());
    if (want("theorem3")) out.push_back(suite_theorem3());
    if (want("pohozaev")) out.push_back(suite_pohozaev());
    if (want("asymptotics")) out.push_back(suite_asymptotics(n_filter));
    if (want("picard")) out.push_back(suite_picard());
    if (want("planar")) out.push_back(suite_planar());
    if (want("negative_controls")) out.push_back(suite_negative_controls());
    if (out.empty())
        throw std::invalid_argument("unknown verify suite: " + name);
    return out;
}

} // namespace nliouville::verify
