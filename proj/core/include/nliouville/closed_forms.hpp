#ifndef NLIOUVILLE_CLOSED_FORMS_HPP
#define NLIOUVILLE_CLOSED_FORMS_HPP

#include <complex>
#include <functional>

#include "nliouville/dimension.hpp"
#include "nliouville/profile.hpp"

namespace nliouville {

enum class FamilyKind { EntireRegular, SingularRadial, Planar2D };

/// Tagged parameter record for the explicit solution families.
struct ClosedFormFamily {
    FamilyKind kind = FamilyKind::EntireRegular;
    double lambda = 1.0;
    double alpha = 0.0;               // SingularRadial, Planar2D only
    std::complex<double> c{0.0, 0.0}; // Planar2D only
    Dimension dim{2, 0.0};

    static ClosedFormFamily entire(int n, double lambda);
    static ClosedFormFamily singular_radial(int n, double alpha, double lambda);
    // Planar2D forces n = 2; alpha not a nonnegative integer requires c = 0.
    static ClosedFormFamily planar(double alpha, double lambda,
                                   std::complex<double> c);
};

/// u(r) = log( c_n lambda^n / (1 + lambda^{n/(n-1)} r^{n/(n-1)})^n ), r >= 0.
double eval_entire(const ClosedFormFamily& f, double r);

/// v(r) = log( c_n (a+1)^n lambda^n / (1 + lambda^{n/(n-1)} r^{n(a+1)/(n-1)})^n ).
/// r = 0 allowed only when alpha >= 0.
double eval_singular_radial(const ClosedFormFamily& f, double r);

/// u(x) = log( 8 (a+1)^2 lambda^2 |x|^{2a} / (1 + lambda^2 |x^{a+1} + c|^2)^2 )
/// with x^{a+1} the principal-branch complex power.
double eval_planar(const ClosedFormFamily& f, double x, double y);

/// Residual of -(1/r^{n-1})(r^{n-1}|U'|^{n-2}U')' - r^{n alpha} e^U at r,
/// derivatives by centered finite differences of step h (needs r - 2h > 0).
double radial_n_laplacian_residual(const std::function<double(double)>& U,
                                   const Dimension& dim, double alpha,
                                   double r, double h);

/// Residual of -Delta u - |x|^{2 alpha_weight} e^u at (x, y) for a planar
/// function, 5-point Laplacian of step h.  alpha_weight = 0 for the
/// unweighted equation the Planar2D family solves away from the origin.
double planar_laplacian_residual(const std::function<double(double, double)>& u,
                                 double x, double y, double h);

/// Uhat(r) = U(1/r) on the reflected grid, reversed to increasing order.
/// rUprime values are negated; mass_cum is recomputed on the new grid.
RadialProfile kelvin_transform(const RadialProfile& profile);

/// Grid r/lambda, values U + n log lambda; the new profile read at x equals
/// U(lambda x) + n log lambda.  mass_cum is unchanged (change of variables).
RadialProfile rescale(const RadialProfile& profile, double lambda,
                      const Dimension& dim);

/// Sample a radial family on a log grid [r_min, r_max]; mass_cum by
/// per-interval Simpson using midpoint evaluations of the closed form.
RadialProfile sample_profile(const ClosedFormFamily& f, double r_min,
                             double r_max, int points_per_decade);

/// n w_n * integral t^{n-1+n alpha} e^{v(t)} dt over (0, inf) for the radial
/// families (alpha = 0 for EntireRegular), log-grid Simpson with analytic
/// power-law tails.  Quadrature grid is anchored to the family's own scale,
/// so the result is invariant in lambda to near machine precision.
double family_total_mass(const ClosedFormFamily& f);

/// integral of e^u over R^2 for the Planar2D family: tensor trapezoid /
/// Simpson in (log r, theta) plus the analytic outer tail.
double planar_total_mass(const ClosedFormFamily& f);

} // namespace nliouville

#endif
