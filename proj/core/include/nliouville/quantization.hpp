#ifndef NLIOUVILLE_QUANTIZATION_HPP
#define NLIOUVILLE_QUANTIZATION_HPP

#include "nliouville/dimension.hpp"
#include "nliouville/mass_report.hpp"

namespace nliouville {

/// LHS - RHS of the mass equation
///   ((n-1)/n)(n w_n)^{-1/(n-1)} g_inf^{n/(n-1)} - n g_inf
///     = n g + ((n-1)/n)(n w_n)^{-1/(n-1)} |g|^{n/(n-1)}
/// at the pair (gamma, gamma_inf).
double eq921_residual(double gamma, double gamma_inf, const Dimension& dim);

/// Unique root gamma_inf in (n^n w_n, +inf) of the mass equation, for
/// gamma > -n^n w_n.  Bisection bracket, then Newton polish; relative
/// residual at the root <= 1e-12.
double mass_equation_root(double gamma, const Dimension& dim);

/// n (n^2/(n-1))^{n-1} (alpha+1)^{n-1} w_n for alpha > -1.
double theorem3_mass(double alpha, const Dimension& dim);

/// alpha0 = log( gamma/w_n + ((n-1)/n)(gamma/(n w_n))^{n/(n-1)} ), gamma > 0.
/// Strictly increasing; the peak height of the radial solution with Dirac
/// mass gamma.
double alpha0_from_gamma(double gamma, const Dimension& dim);

struct QuantizationVerdict {
    bool gamma_ok = false;
    bool gamma_inf_ok = false;
    bool mass_ok = false;
    double gamma_resid = 0.0;     // |gamma_num - gamma_target| / max(1,|target|)
    double gamma_inf_resid = 0.0; // relative against mass_equation_root
    double mass_resid = 0.0;      // |total - (g + g_inf)| / total

    bool pass() const { return gamma_ok && gamma_inf_ok && mass_ok; }
};

/// Check a measured report against the target mass: (a) gamma_num vs
/// gamma_target, (b) gamma_inf_num vs mass_equation_root(gamma_target),
/// (c) total_mass vs gamma_num + gamma_inf_num; all at relative tol.
QuantizationVerdict verify_quantization(const MassReport& report,
                                        double gamma_target,
                                        const Dimension& dim, double tol);

} // namespace nliouville

#endif
