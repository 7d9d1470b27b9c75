#ifndef NLIOUVILLE_PROFILE_HPP
#define NLIOUVILLE_PROFILE_HPP

#include <vector>

#include "nliouville/dimension.hpp"

namespace nliouville {

/// A sampled radial solution on a strictly increasing (log-spaced) grid.
/// mass_cum[i] = n w_n * integral of t^{n-1} e^{U(t)} dt from grid[0]
/// to grid[i]; nondecreasing, mass_cum[0] = 0.
struct RadialProfile {
    Dimension dim{2, 0.0};
    std::vector<double> grid;
    std::vector<double> U;
    std::vector<double> rUprime; // r U'(r) at each node
    std::vector<double> mass_cum;

    std::size_t size() const { return grid.size(); }
};

/// U(r) interpolated at r (cubic Hermite in log r, using rUprime).
double profile_value(const RadialProfile& p, double r);

/// r U'(r) interpolated at r (linear in log r).
double profile_rUprime(const RadialProfile& p, double r);

} // namespace nliouville

#endif
