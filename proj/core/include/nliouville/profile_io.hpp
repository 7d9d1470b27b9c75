#ifndef NLIOUVILLE_PROFILE_IO_HPP
#define NLIOUVILLE_PROFILE_IO_HPP

#include <iosfwd>
#include <string>

#include "nliouville/mass_report.hpp"
#include "nliouville/profile.hpp"

namespace nliouville {

/// CSV schema: header "r,U,rUprime,mass_cum", 17 significant digits,
/// rows in increasing r.
void write_profile_csv(std::ostream& os, const RadialProfile& profile);
void write_profile_csv(const std::string& path, const RadialProfile& profile);

RadialProfile read_profile_csv(std::istream& is, const Dimension& dim);
RadialProfile read_profile_csv(const std::string& path, const Dimension& dim);

/// Report JSON keys: n, omega_n, gamma_num, gamma_inf_num, total_mass,
/// eq921_residual, slope_origin, slope_infinity, uncertainties, pass.
std::string report_to_json(const MassReport& report, bool pass);
void write_report_json(const std::string& path, const MassReport& report,
                       bool pass);

} // namespace nliouville

#endif
