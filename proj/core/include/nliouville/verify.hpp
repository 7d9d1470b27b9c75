#ifndef NLIOUVILLE_VERIFY_HPP
#define NLIOUVILLE_VERIFY_HPP

#include <string>
#include <vector>

namespace nliouville::verify {

/// One check of a verification suite: a measured residual against its
/// tolerance.  Residuals are reported, never just booleans.
struct Check {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;
    bool pass() const;
    double worst_margin() const; // max residual/tol over the suite
};

// The verification suites.  All randomness is fixed-seed, so repeated runs
// are bit-identical.
SuiteResult suite_entire_mass();                  // entire n=2 total mass = 8 pi
SuiteResult suite_quantization(int n_filter = 0); // solve + measure sweep
SuiteResult suite_root_law();                     // n=2: root = gamma + 8 pi
SuiteResult suite_theorem3();                     // weighted family masses
SuiteResult suite_pohozaev();                     // annulus identity + limits
SuiteResult suite_asymptotics(int n_filter = 0);  // slope limits + Kelvin
SuiteResult suite_picard();                       // contraction + RK agreement
SuiteResult suite_planar();                       // 2D family residual + mass
SuiteResult suite_negative_controls();            // checkers are not vacuous

/// Run a suite by name ("all" runs every suite in a fixed order).
std::vector<SuiteResult> run_suites(const std::string& name,
                                    int n_filter = 0);

std::vector<std::string> suite_names();

} // namespace nliouville::verify

#endif
