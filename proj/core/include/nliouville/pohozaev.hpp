#ifndef NLIOUVILLE_POHOZAEV_HPP
#define NLIOUVILLE_POHOZAEV_HPP

#include "nliouville/dimension.hpp"
#include "nliouville/profile.hpp"

namespace nliouville {

/// Both sides of the annulus identity
///   n(alpha+1) * int_A |x|^{n alpha} e^u = boundary(R) - boundary(eps)
/// and their difference.  The checker never assumes the profile solves the
/// equation; nonzero residual on a non-solution is the negative control.
struct AnnulusCheck {
    double eps = 0.0;
    double R = 0.0;
    double interior_integral = 0.0;
    double boundary_outer = 0.0;
    double boundary_inner = 0.0;
    double residual = 0.0; // interior - (outer - inner)
};

/// Radial boundary integral over the sphere of radius r, outward normal:
///   n w_n r^n [ r^{n alpha} e^{U(r)} + ((n-1)/n) |U'(r)|^n ].
/// Converges to ((n-1)/n)(n w_n)^{-1/(n-1)} |gamma|^{n/(n-1)} as r -> 0
/// and to the same expression in gamma_inf as r -> inf.
double boundary_functional(const RadialProfile& profile, double alpha,
                           double r, const Dimension& dim);

/// Evaluate the annulus identity on [eps, R].  Interior integral from the
/// profile's mass accumulator when alpha = 0, otherwise a log-grid
/// trapezoid with one Richardson extrapolation.
AnnulusCheck check_annulus(const RadialProfile& profile, double alpha,
                           double eps, double R, const Dimension& dim);

/// LHS - RHS of the limit mass balance
///   n(alpha+1)(gamma + gamma_inf)
///     = ((n-1)/n)(n w_n)^{-1/(n-1)} [ |gamma_inf|^{n/(n-1)} - |gamma|^{n/(n-1)} ].
double mass_balance_residual(double gamma, double gamma_inf, double alpha,
                             const Dimension& dim);

} // namespace nliouville

#endif
