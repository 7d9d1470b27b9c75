#ifndef NLIOUVILLE_DIMENSION_HPP
#define NLIOUVILLE_DIMENSION_HPP

#include <optional>

namespace nliouville {

/// Volume of the unit ball in R^n, by the two-term recurrence
/// w_1 = 2, w_2 = pi, w_n = (2 pi / n) w_{n-2}.  Rejects n < 1.
double ball_volume(int n);

/// Ambient dimension n >= 2 together with the unit-ball volume w_n.
struct Dimension {
    int n;
    double omega_n;

    static Dimension of(int n);

    // Area(S^{n-1}) = n w_n
    double sphere_area() const { return n * omega_n; }
};

/// gamma = n w_n |s|^{n-2} s.  Odd and strictly increasing in s.
double slope_to_gamma(double s, const Dimension& dim);

/// s = sign(gamma) (|gamma| / (n w_n))^{1/(n-1)}.  Exact inverse of
/// slope_to_gamma up to rounding.
double gamma_to_slope(double gamma, const Dimension& dim);

/// c_n = n (n^2/(n-1))^{n-1}; equals 8 when n = 2.
double c_n(const Dimension& dim);

/// Weight exponent alpha, Dirac mass gamma at the origin and
/// (once measured) the mass gamma_inf at infinity.
struct SingularWeights {
    double alpha = 0.0;
    double gamma = 0.0;
    std::optional<double> gamma_inf;

    // n^n |alpha+1|^{n-2} (alpha+1) w_n, the admissibility threshold:
    // gamma must exceed -threshold, gamma_inf must exceed +threshold.
    static double critical_mass(double alpha, const Dimension& dim);

    bool admissible(const Dimension& dim) const;
};

} // namespace nliouville

#endif
