#include "nliouville/quantization.hpp"

#include <cmath>
#include <stdexcept>

namespace nliouville {

namespace {

// (n-1)/n (n w_n)^{-1/(n-1)} |s|^{n/(n-1)}
double kinetic_term(double s, const Dimension& dim) {
    const double n = dim.n;
    return (n - 1.0) / n * std::pow(dim.sphere_area(), -1.0 / (n - 1.0)) *
           std::pow(std::fabs(s), n / (n - 1.0));
}

} // namespace

double eq921_residual(double gamma, double gamma_inf, const Dimension& dim) {
    const double n = dim.n;
    return kinetic_term(gamma_inf, dim) - n * gamma_inf - n * gamma -
           kinetic_term(gamma, dim);
}

double mass_equation_root(double gamma, const Dimension& dim) {
    const double n = dim.n;
    const double crit = std::pow(n, n) * dim.omega_n; // n^n w_n
    if (!(gamma > -crit))
        throw std::invalid_argument(
            "mass_equation_root: gamma must exceed -n^n w_n");
    const double rhs = n * gamma + kinetic_term(gamma, dim);
    auto g = [&](double s) { return kinetic_term(s, dim) - n * s - rhs; };
    // g is strictly increasing on (n^n w_n, inf); bracket then bisect to
    // width 1e-3, polish with Newton
    double lo = crit * (1.0 + 1e-12);
    double hi = crit + n * std::fabs(gamma) + c_n(dim) * dim.omega_n + 10.0;
    while (g(hi) < 0.0) hi *= 2.0;
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    double s = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
        // g'(s) = (n w_n)^{-1/(n-1)} s^{1/(n-1)} - n
        const double gp = std::pow(dim.sphere_area(), -1.0 / (n - 1.0)) *
                              std::pow(s, 1.0 / (n - 1.0)) -
                          n;
        const double step = g(s) / gp;
        s -= step;
        if (std::fabs(step) < 1e-15 * s) break;
    }
    return s;
}

double theorem3_mass(double alpha, const Dimension& dim) {
    if (!(alpha > -1.0))
        throw std::invalid_argument("theorem3_mass: alpha must be > -1");
    return c_n(dim) * std::pow(alpha + 1.0, dim.n - 1.0) * dim.omega_n;
}

double alpha0_from_gamma(double gamma, const Dimension& dim) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("alpha0_from_gamma: gamma must be > 0");
    const double n = dim.n;
    return std::log(gamma / dim.omega_n +
                    (n - 1.0) / n *
                        std::pow(gamma / dim.sphere_area(), n / (n - 1.0)));
}

QuantizationVerdict verify_quantization(const MassReport& report,
                                        double gamma_target,
                                        const Dimension& dim, double tol) {
    QuantizationVerdict v;
    v.gamma_resid = std::fabs(report.gamma_num - gamma_target) /
                    std::max(1.0, std::fabs(gamma_target));
    v.gamma_ok = v.gamma_resid <= tol;

    const double root = mass_equation_root(gamma_target, dim);
    v.gamma_inf_resid = std::fabs(report.gamma_inf_num - root) / root;
    v.gamma_inf_ok = v.gamma_inf_resid <= tol;

    const double sum = report.gamma_num + report.gamma_inf_num;
    v.mass_resid = std::fabs(report.total_mass - sum) /
                   std::max(report.total_mass, 1e-300);
    v.mass_ok = v.mass_resid <= tol;
    return v;
}

} // namespace nliouville
