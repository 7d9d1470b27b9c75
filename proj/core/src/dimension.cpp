#include "nliouville/dimension.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nliouville {

double ball_volume(int n) {
    if (n < 1)
        throw std::invalid_argument("ball_volume: n must be >= 1, got " +
                                    std::to_string(n));
    // w_1 = 2, w_2 = pi, w_n = (2 pi / n) w_{n-2}
    double w_odd = 2.0;  // w_1
    double w_even = M_PI; // w_2
    if (n == 1) return w_odd;
    if (n == 2) return w_even;
    double w = (n % 2 == 1) ? w_odd : w_even;
    for (int k = (n % 2 == 1) ? 3 : 4; k <= n; k += 2)
        w *= 2.0 * M_PI / k;
    return w;
}

Dimension Dimension::of(int n) {
    if (n < 2)
        throw std::invalid_argument("Dimension: n must be >= 2, got " +
                                    std::to_string(n));
    return Dimension{n, ball_volume(n)};
}

double slope_to_gamma(double s, const Dimension& dim) {
    const int n = dim.n;
    return dim.sphere_area() * std::pow(std::fabs(s), n - 2) * s;
}

double gamma_to_slope(double gamma, const Dimension& dim) {
    if (gamma == 0.0) return 0.0;
    const double mag =
        std::pow(std::fabs(gamma) / dim.sphere_area(), 1.0 / (dim.n - 1));
    return std::copysign(mag, gamma);
}

double c_n(const Dimension& dim) {
    const double n = dim.n;
    return n * std::pow(n * n / (n - 1.0), n - 1.0);
}

double SingularWeights::critical_mass(double alpha, const Dimension& dim) {
    const double n = dim.n;
    return std::pow(n, n) * std::pow(std::fabs(alpha + 1.0), n - 2.0) *
           (alpha + 1.0) * dim.omega_n;
}

bool SingularWeights::admissible(const Dimension& dim) const {
    const double crit = critical_mass(alpha, dim);
    if (!(gamma > -crit)) return false;
    if (gamma_inf && !(*gamma_inf > crit)) return false;
    return true;
}

} // namespace nliouville
