#ifndef NLIOUVILLE_RADIAL_ODE_HPP
#define NLIOUVILLE_RADIAL_ODE_HPP

#include <vector>

#include "nliouville/dimension.hpp"
#include "nliouville/mass_report.hpp"
#include "nliouville/profile.hpp"

namespace nliouville {

/// Integrator state: flux F = r^{n-1}|U'|^{n-2}U' and accumulated mass
/// M = integral of t^{n-1} e^{U} from the start radius (signed).
/// F' = -r^{n-1} e^U exactly, so F + M is a first integral.
struct OdeState {
    double r = 1.0;
    double U = 0.0;
    double F = 0.0;
    double M = 0.0;

    // U' recovered from (r, F) alone
    double Uprime(const Dimension& dim) const;
};

struct SolveConfig {
    double r_min = 1e-8;
    double r_max = 1e8;
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_steps = 4'000'000;
    int points_per_decade = 64;

    void validate() const; // throws std::invalid_argument
};

/// Solve with U(1) = alpha0, U'(1) = 0, inward to r_min and outward to
/// r_max.  The degenerate peak (F = 0) is crossed by one local-series step
/// before handing off to the adaptive stepper.  Rejects alpha0 > 700.
RadialProfile solve_from_peak(double alpha0, const Dimension& dim,
                              const SolveConfig& cfg = {});

/// Adaptive RK integration of the Cauchy problem U(r0) = alpha0,
/// U'(r0) = alpha1 != 0, reporting U at the requested radii (which must
/// bracket no sign change of the flux; used to cross-check the Picard
/// solver on its contraction interval).
std::vector<double> integrate_cauchy(double r0, double alpha0, double alpha1,
                                     const Dimension& dim,
                                     const std::vector<double>& radii,
                                     double rel_tol = 1e-12,
                                     double abs_tol = 1e-13);

/// Contraction half-width from the step bound, with
/// C_M = (1 + (n-2)/(n-1)) (4 M^{2n-2})^{(n-2)/(n-1)}.
double picard_delta(const Dimension& dim, double M);

struct PicardResult {
    std::vector<double> grid; // uniform on [r0 - delta, r0 + delta]
    std::vector<double> U;    // fixed point of T on the grid
    double delta = 0.0;
    int iterations = 0;
    // sup-distance ratio of successive iterates, while above noise level
    std::vector<double> contraction_factors;
    bool contracted = false; // all recorded factors < 1
};

/// Picard iteration of the fixed-point operator T on [r0 - delta, r0 + delta],
/// quadrature by composite Simpson-type rule on a fixed fine subgrid.
/// Parameters must lie in the box 1/M <= r0 <= M, alpha0 <= M,
/// 1/M <= |alpha1| <= M.
PicardResult picard_local_solve(double r0, double alpha0, double alpha1,
                                const Dimension& dim, int iters,
                                double M = 2.0);

/// n w_n * integral t^{n-1} e^U dt over [from_r, to_r], read off mass_cum
/// (linear interpolation in log r between nodes).  Additive over adjacent
/// intervals.
double mass_of(const RadialProfile& profile, double from_r, double to_r);

enum class ProfileEnd { Origin, Infinity };

struct SlopeEstimate {
    double slope = 0.0;
    double uncertainty = 0.0; // max deviation over the fit window
};

/// Limit of r U'(r) toward the requested end: constant least-squares fit
/// over the last decade of the grid.  Needs >= 2 decades of grid span.
SlopeEstimate asymptotic_slope(const RadialProfile& profile, ProfileEnd end);

/// Measured gamma, gamma_inf (from the slope limits), total mass over the
/// grid plus analytic power-law tails, and the mass-equation residual.
MassReport measure(const RadialProfile& profile);

} // namespace nliouville

#endif
