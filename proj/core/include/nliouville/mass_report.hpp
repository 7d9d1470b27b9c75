#ifndef NLIOUVILLE_MASS_REPORT_HPP
#define NLIOUVILLE_MASS_REPORT_HPP

namespace nliouville {

/// Measured masses and slopes of a radial profile, plus the residual of the
/// mass equation relating gamma and gamma_inf.
struct MassReport {
    int n = 2;
    double omega_n = 0.0;
    double gamma_num = 0.0;
    double gamma_inf_num = 0.0;
    double total_mass = 0.0;
    double eq921_residual = 0.0;
    double slope_origin = 0.0;
    double slope_infinity = 0.0;
    double slope_origin_unc = 0.0;
    double slope_infinity_unc = 0.0;
};

} // namespace nliouville

#endif
