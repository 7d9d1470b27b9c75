#include "nliouville/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nliouville {

namespace {

double sign_pow(double x, double p) {
    // |x|^p * sign(x)
    if (x == 0.0) return 0.0;
    return std::copysign(std::pow(std::fabs(x), p), x);
}

bool is_natural(double a) { return a >= 0.0 && a == std::floor(a); }

} // namespace

// interpolation on sampled profiles -----------------------------------------

namespace {

std::size_t locate(const std::vector<double>& grid, double r) {
    if (grid.size() < 2 || r < grid.front() || r > grid.back())
        throw std::out_of_range("profile interpolation: r outside grid");
    auto it = std::upper_bound(grid.begin(), grid.end(), r);
    std::size_t i = static_cast<std::size_t>(it - grid.begin());
    if (i == 0) i = 1;
    if (i == grid.size()) i = grid.size() - 1;
    return i - 1;
}

} // namespace

double profile_value(const RadialProfile& p, double r) {
    const std::size_t i = locate(p.grid, r);
    const double s0 = std::log(p.grid[i]), s1 = std::log(p.grid[i + 1]);
    const double h = s1 - s0;
    const double t = (std::log(r) - s0) / h;
    // cubic Hermite in s = log r; dU/ds = r U'
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    return h00 * p.U[i] + h10 * h * p.rUprime[i] + h01 * p.U[i + 1] +
           h11 * h * p.rUprime[i + 1];
}

double profile_rUprime(const RadialProfile& p, double r) {
    const std::size_t i = locate(p.grid, r);
    const double s0 = std::log(p.grid[i]), s1 = std::log(p.grid[i + 1]);
    const double t = (std::log(r) - s0) / (s1 - s0);
    return (1.0 - t) * p.rUprime[i] + t * p.rUprime[i + 1];
}

// families ------------------------------------------------------------------

ClosedFormFamily ClosedFormFamily::entire(int n, double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("ClosedFormFamily: lambda must be > 0");
    return {FamilyKind::EntireRegular, lambda, 0.0, {0, 0}, Dimension::of(n)};
}

ClosedFormFamily ClosedFormFamily::singular_radial(int n, double alpha,
                                                   double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("ClosedFormFamily: lambda must be > 0");
    if (!(alpha > -1.0))
        throw std::invalid_argument(
            "ClosedFormFamily: singular radial family needs alpha > -1");
    return {FamilyKind::SingularRadial, lambda, alpha, {0, 0},
            Dimension::of(n)};
}

ClosedFormFamily ClosedFormFamily::planar(double alpha, double lambda,
                                          std::complex<double> c) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("ClosedFormFamily: lambda must be > 0");
    if (!(alpha > -1.0))
        throw std::invalid_argument(
            "ClosedFormFamily: planar family needs alpha > -1");
    if (!is_natural(alpha) && c != std::complex<double>{0, 0})
        throw std::invalid_argument(
            "ClosedFormFamily: alpha not a nonnegative integer forces c = 0");
    return {FamilyKind::Planar2D, lambda, alpha, c, Dimension::of(2)};
}

double eval_entire(const ClosedFormFamily& f, double r) {
    if (f.kind != FamilyKind::EntireRegular)
        throw std::invalid_argument("eval_entire: wrong family kind");
    if (r < 0.0)
        throw std::invalid_argument("eval_entire: r must be >= 0");
    const double n = f.dim.n;
    const double q = n / (n - 1.0);
    const double t = std::pow(f.lambda * r, q);
    return std::log(c_n(f.dim)) + n * std::log(f.lambda) - n * std::log1p(t);
}

double eval_singular_radial(const ClosedFormFamily& f, double r) {
    if (f.kind != FamilyKind::SingularRadial)
        throw std::invalid_argument("eval_singular_radial: wrong family kind");
    if (r < 0.0 || (r == 0.0 && f.alpha < 0.0))
        throw std::domain_error(
            "eval_singular_radial: value singular at r = 0 for alpha < 0");
    const double n = f.dim.n;
    const double q = n / (n - 1.0);
    const double b = f.alpha + 1.0;
    const double t =
        r == 0.0 ? 0.0 : std::pow(f.lambda, q) * std::pow(r, q * b);
    return std::log(c_n(f.dim)) + n * std::log(b) + n * std::log(f.lambda) -
           n * std::log1p(t);
}

double eval_planar(const ClosedFormFamily& f, double x, double y) {
    if (f.kind != FamilyKind::Planar2D)
        throw std::invalid_argument("eval_planar: wrong family kind");
    const std::complex<double> z{x, y};
    const double rho = std::abs(z);
    if (rho == 0.0) {
        if (f.alpha != 0.0)
            throw std::domain_error("eval_planar: value singular at x = 0");
        // alpha = 0: finite value at the origin
        return std::log(8.0 * f.lambda * f.lambda) -
               2.0 * std::log1p(f.lambda * f.lambda * std::norm(f.c));
    }
    const double b = f.alpha + 1.0;
    const std::complex<double> w = std::pow(z, b); // principal branch
    const double den = f.lambda * f.lambda * std::norm(w + f.c);
    return std::log(8.0 * b * b * f.lambda * f.lambda) +
           2.0 * f.alpha * std::log(rho) - 2.0 * std::log1p(den);
}

// residual checkers ---------------------------------------------------------

double radial_n_laplacian_residual(const std::function<double(double)>& U,
                                   const Dimension& dim, double alpha,
                                   double r, double h) {
    if (!(r > 0.0) || !(h > 0.0))
        throw std::invalid_argument(
            "radial_n_laplacian_residual: r and h must be positive");
    if (!(r - 2.0 * h > 0.0))
        throw std::invalid_argument(
            "radial_n_laplacian_residual: need r - 2h > 0");
    const int n = dim.n;
    auto uprime = [&](double rho) {
        return (U(rho + h) - U(rho - h)) / (2.0 * h);
    };
    auto flux = [&](double rho) {
        return std::pow(rho, n - 1) * sign_pow(uprime(rho), n - 1.0);
    };
    const double div_term =
        (flux(r + h) - flux(r - h)) / (2.0 * h) / std::pow(r, n - 1);
    return -div_term - std::pow(r, n * alpha) * std::exp(U(r));
}

double planar_laplacian_residual(const std::function<double(double, double)>& u,
                                 double x, double y, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("planar_laplacian_residual: h must be > 0");
    const double lap = (u(x + h, y) + u(x - h, y) + u(x, y + h) + u(x, y - h) -
                        4.0 * u(x, y)) /
                       (h * h);
    return -lap - std::exp(u(x, y));
}

// symmetries ----------------------------------------------------------------

RadialProfile kelvin_transform(const RadialProfile& profile) {
    const std::size_t m = profile.size();
    if (m < 2 || profile.grid.front() <= 0.0)
        throw std::invalid_argument("kelvin_transform: invalid profile grid");
    RadialProfile out;
    out.dim = profile.dim;
    out.grid.resize(m);
    out.U.resize(m);
    out.rUprime.resize(m);
    out.mass_cum.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = m - 1 - i;
        out.grid[i] = 1.0 / profile.grid[j];
        out.U[i] = profile.U[j];
        // r d/dr U(1/r) = -(rho U'(rho)) at rho = 1/r
        out.rUprime[i] = -profile.rUprime[j];
    }
    // the transformed mass accumulator is recomputed on the new grid
    const int n = out.dim.n;
    out.mass_cum[0] = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
        const double s0 = std::log(out.grid[i - 1]);
        const double s1 = std::log(out.grid[i]);
        const double g0 = std::pow(out.grid[i - 1], n) * std::exp(out.U[i - 1]);
        const double g1 = std::pow(out.grid[i], n) * std::exp(out.U[i]);
        out.mass_cum[i] = out.mass_cum[i - 1] +
                          out.dim.sphere_area() * 0.5 * (g0 + g1) * (s1 - s0);
    }
    return out;
}

RadialProfile rescale(const RadialProfile& profile, double lambda,
                      const Dimension& dim) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("rescale: lambda must be > 0");
    RadialProfile out = profile;
    const double shift = dim.n * std::log(lambda);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.grid[i] = profile.grid[i] / lambda;
        out.U[i] = profile.U[i] + shift;
        // r U_lambda'(r) = (lambda r) U'(lambda r): node values unchanged
    }
    // mass_cum invariant: t^{n-1} e^{U(lambda t) + n log lambda} dt is the
    // original integrand after s = lambda t
    return out;
}

// sampling and quadrature ---------------------------------------------------

namespace {

struct RadialEval {
    // U(r) and r U'(r) for the radial families
    std::function<double(double)> value;
    std::function<double(double)> rUprime;
};

RadialEval radial_evaluator(const ClosedFormFamily& f) {
    const double n = f.dim.n;
    const double q = n / (n - 1.0);
    if (f.kind == FamilyKind::EntireRegular) {
        return {[f](double r) { return eval_entire(f, r); },
                [f, n, q](double r) {
                    const double t = std::pow(f.lambda * r, q);
                    return -n * q * t / (1.0 + t);
                }};
    }
    if (f.kind == FamilyKind::SingularRadial) {
        const double b = f.alpha + 1.0;
        return {[f](double r) { return eval_singular_radial(f, r); },
                [f, n, q, b](double r) {
                    const double t =
                        std::pow(f.lambda, q) * std::pow(r, q * b);
                    return -n * q * b * t / (1.0 + t);
                }};
    }
    throw std::invalid_argument("radial evaluator: family is not radial");
}

} // namespace

RadialProfile sample_profile(const ClosedFormFamily& f, double r_min,
                             double r_max, int points_per_decade) {
    if (!(r_min > 0.0) || !(r_max > r_min) || points_per_decade < 2)
        throw std::invalid_argument("sample_profile: invalid grid request");
    const auto ev = radial_evaluator(f);
    const double ppd = points_per_decade;
    const long k_min = std::lround(std::ceil(std::log10(r_min) * ppd - 1e-9));
    const long k_max = std::lround(std::floor(std::log10(r_max) * ppd + 1e-9));
    RadialProfile p;
    p.dim = f.dim;
    const int n = f.dim.n;
    for (long k = k_min; k <= k_max; ++k) {
        const double r = std::pow(10.0, k / ppd);
        p.grid.push_back(r);
        p.U.push_back(ev.value(r));
        p.rUprime.push_back(ev.rUprime(r));
    }
    p.mass_cum.assign(p.size(), 0.0);
    auto g = [&](double s) {
        const double r = std::exp(s);
        return f.dim.sphere_area() * std::exp(n * s + ev.value(r));
    };
    for (std::size_t i = 1; i < p.size(); ++i) {
        const double s0 = std::log(p.grid[i - 1]);
        const double s1 = std::log(p.grid[i]);
        const double sm = 0.5 * (s0 + s1);
        p.mass_cum[i] = p.mass_cum[i - 1] +
                        (s1 - s0) / 6.0 * (g(s0) + 4.0 * g(sm) + g(s1));
    }
    return p;
}

double family_total_mass(const ClosedFormFamily& f) {
    if (f.kind == FamilyKind::Planar2D) return planar_total_mass(f);
    const auto ev = radial_evaluator(f);
    const double n = f.dim.n;
    const double b = f.alpha + 1.0; // 1 for the entire family
    // w = log(lambda^{1/b} t) centers the integrand independently of lambda
    const double lam_shift = std::log(f.lambda) / b;
    auto integrand = [&](double w) {
        const double s = w - lam_shift; // s = log t
        const double t = std::exp(s);
        // t^{n(1+alpha)} e^{v(t)}, evaluated in logs
        return std::exp(n * b * s + ev.value(t));
    };
    // decay rates: e^{n b w} at -inf, e^{-n b w/(n-1)} at +inf
    const double w_lo = -45.0 * std::max(1.0, 1.0 / b);
    const double w_hi = 45.0 * std::max(1.0, (n - 1.0) / b);
    const int N = 1 << 16;
    const double h = (w_hi - w_lo) / N;
    double acc = integrand(w_lo) + integrand(w_hi);
    for (int i = 1; i < N; ++i)
        acc += (i % 2 == 1 ? 4.0 : 2.0) * integrand(w_lo + i * h);
    double mass = f.dim.sphere_area() * acc * h / 3.0;
    // analytic power-law tails
    mass += f.dim.sphere_area() * integrand(w_lo) / (n * b);
    mass += f.dim.sphere_area() * integrand(w_hi) * (n - 1.0) / (n * b);
    return mass;
}

double planar_total_mass(const ClosedFormFamily& f) {
    if (f.kind != FamilyKind::Planar2D)
        throw std::invalid_argument("planar_total_mass: wrong family kind");
    const double b = f.alpha + 1.0;
    const double s_lo = std::log(1e-5), s_hi = std::log(1e5);
    const int Ns = 6000; // even, Simpson in s = log r
    const int Nt = 512;  // periodic trapezoid in theta
    const double hs = (s_hi - s_lo) / Ns;
    const double ht = 2.0 * M_PI / Nt;
    auto ring = [&](double s) {
        const double r = std::exp(s);
        double acc = 0.0;
        for (int j = 0; j < Nt; ++j) {
            const double th = j * ht;
            acc += std::exp(eval_planar(f, r * std::cos(th), r * std::sin(th)));
        }
        return acc * ht * r * r; // e^u r^2 integrated over the circle
    };
    double acc = ring(s_lo) + ring(s_hi);
    for (int i = 1; i < Ns; ++i)
        acc += (i % 2 == 1 ? 4.0 : 2.0) * ring(s_lo + i * hs);
    double mass = acc * hs / 3.0;
    // outer tail: e^u ~ 8 b^2 / (lambda^2 r^{2 alpha + 4})
    const double R = std::exp(s_hi);
    mass += 2.0 * M_PI * 8.0 * b * b /
            (f.lambda * f.lambda * (2.0 * f.alpha + 2.0) *
             std::pow(R, 2.0 * f.alpha + 2.0));
    return mass;
}

} // namespace nliouville
