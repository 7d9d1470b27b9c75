#include "nliouville/pohozaev.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "nliouville/radial_ode.hpp" // mass_of

namespace nliouville {

double boundary_functional(const RadialProfile& profile, double alpha,
                           double r, const Dimension& dim) {
    const int n = dim.n;
    const double U = profile_value(profile, r);
    const double rup = profile_rUprime(profile, r); // r U'(r)
    const double uprime = rup / r;
    // n w_n r^n [ r^{n a} e^U + (n-1)/n |U'|^n ]
    return dim.sphere_area() * std::pow(r, n) *
           (std::pow(r, n * alpha) * std::exp(U) +
            (n - 1.0) / n * std::pow(std::fabs(uprime), double(n)));
}

namespace {

// interior n w_n * int t^{n-1+n a} e^U dt on [eps, R] by log-grid trapezoid
// over the profile nodes, Richardson-extrapolated once
double weighted_interior(const RadialProfile& p, double alpha, double eps,
                         double R) {
    const auto& grid = p.grid;
    auto lo_it = std::lower_bound(grid.begin(), grid.end(), eps * (1 - 1e-12));
    auto hi_it = std::upper_bound(grid.begin(), grid.end(), R * (1 + 1e-12));
    const std::size_t lo = static_cast<std::size_t>(lo_it - grid.begin());
    const std::size_t hi = static_cast<std::size_t>(hi_it - grid.begin()) - 1;
    if (hi <= lo + 4)
        throw std::invalid_argument(
            "check_annulus: annulus covers too few grid nodes");
    const int n = p.dim.n;
    std::vector<double> s(hi - lo + 1), g(hi - lo + 1);
    for (std::size_t i = lo; i <= hi; ++i) {
        s[i - lo] = std::log(grid[i]);
        g[i - lo] = std::exp((n + n * alpha) * s[i - lo] + p.U[i]);
    }
    auto trap = [&](std::size_t stride) {
        double acc = 0.0;
        std::size_t prev = 0;
        for (std::size_t j = stride; j < s.size(); j += stride) {
            acc += 0.5 * (g[prev] + g[j]) * (s[j] - s[prev]);
            prev = j;
        }
        if (prev != s.size() - 1) // leftover partial panel
            acc += 0.5 * (g[prev] + g.back()) * (s.back() - s[prev]);
        return acc;
    };
    const double fine = trap(1), coarse = trap(2);
    return p.dim.sphere_area() * (4.0 * fine - coarse) / 3.0;
}

} // namespace

AnnulusCheck check_annulus(const RadialProfile& profile, double alpha,
                           double eps, double R, const Dimension& dim) {
    if (!(eps > 0.0 && eps < R))
        throw std::invalid_argument("check_annulus: need 0 < eps < R");
    AnnulusCheck out;
    out.eps = eps;
    out.R = R;
    const double n = dim.n;
    double integral;
    if (alpha == 0.0) {
        integral = mass_of(profile, eps, R);
    } else {
        integral = weighted_interior(profile, alpha, eps, R);
    }
    out.interior_integral = n * (alpha + 1.0) * integral;
    out.boundary_outer = boundary_functional(profile, alpha, R, dim);
    out.boundary_inner = boundary_functional(profile, alpha, eps, dim);
    out.residual =
        out.interior_integral - (out.boundary_outer - out.boundary_inner);
    return out;
}

double mass_balance_residual(double gamma, double gamma_inf, double alpha,
                             const Dimension& dim) {
    const double n = dim.n;
    const double k = (n - 1.0) / n *
                     std::pow(dim.sphere_area(), -1.0 / (n - 1.0));
    const double lhs = n * (alpha + 1.0) * (gamma + gamma_inf);
    const double rhs = k * (std::pow(std::fabs(gamma_inf), n / (n - 1.0)) -
                            std::pow(std::fabs(gamma), n / (n - 1.0)));
    return lhs - rhs;
}

} // namespace nliouville
