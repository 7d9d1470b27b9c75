#include "nliouville/radial_ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "nliouville/quantization.hpp"

namespace nliouville {

namespace {

double sign_pow(double x, double p) {
    if (x == 0.0) return 0.0;
    return std::copysign(std::pow(std::fabs(x), p), x);
}

using Vec3 = std::array<double, 3>; // (U, F, M)

struct RkOptions {
    double rel_tol;
    double abs_tol;
    int max_steps;
};

// Dormand-Prince 4(5) embedded pair, adaptive step, landing exactly on each
// checkpoint (checkpoints monotone in the integration direction).
void rk45_integrate(const std::function<Vec3(double, const Vec3&)>& f,
                    double s0, Vec3 y, const std::vector<double>& checkpoints,
                    const RkOptions& opt,
                    const std::function<void(double, const Vec3&)>& sink) {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                            b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                            e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                            c5 = 8.0 / 9;

    if (checkpoints.empty()) return;
    const double dir = checkpoints.back() >= s0 ? 1.0 : -1.0;
    double s = s0;
    double h = dir * 1e-3;
    int steps = 0;
    Vec3 k1 = f(s, y);
    bool have_k1 = true;

    for (double target : checkpoints) {
        while ((target - s) * dir > 0.0) {
            if (++steps > opt.max_steps)
                throw std::runtime_error(
                    "rk45: step count exhausted near r = " +
                    std::to_string(std::exp(s)));
            if ((s + h - target) * dir > 0.0) h = target - s;
            if (!have_k1) {
                k1 = f(s, y);
                have_k1 = true;
            }
            Vec3 t, k2, k3, k4, k5, k6, k7, y5;
            for (int i = 0; i < 3; ++i) t[i] = y[i] + h * a21 * k1[i];
            k2 = f(s + c2 * h, t);
            for (int i = 0; i < 3; ++i)
                t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
            k3 = f(s + c3 * h, t);
            for (int i = 0; i < 3; ++i)
                t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            k4 = f(s + c4 * h, t);
            for (int i = 0; i < 3; ++i)
                t[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                                   a54 * k4[i]);
            k5 = f(s + c5 * h, t);
            for (int i = 0; i < 3; ++i)
                t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                   a64 * k4[i] + a65 * k5[i]);
            k6 = f(s + h, t);
            for (int i = 0; i < 3; ++i)
                y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                    b5 * k5[i] + b6 * k6[i]);
            k7 = f(s + h, y5);
            double err = 0.0;
            for (int i = 0; i < 3; ++i) {
                const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                      e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                const double sc =
                    opt.abs_tol +
                    opt.rel_tol * std::max(std::fabs(y[i]), std::fabs(y5[i]));
                err += (e / sc) * (e / sc);
            }
            err = std::sqrt(err / 3.0);
            if (!std::isfinite(err))
                throw std::runtime_error(
                    "rk45: nonfinite state near r = " +
                    std::to_string(std::exp(s)));
            if (err <= 1.0) {
                s += h;
                y = y5;
                k1 = k7; // FSAL
            } else {
                have_k1 = true; // k1 still valid at unchanged s
            }
            const double fac =
                std::clamp(0.9 * std::pow(std::max(err, 1e-12), -0.2), 0.2,
                           5.0);
            h *= fac;
        }
        sink(target, y);
    }
}

} // namespace

double OdeState::Uprime(const Dimension& dim) const {
    return sign_pow(F / std::pow(r, dim.n - 1), 1.0 / (dim.n - 1));
}

void SolveConfig::validate() const {
    if (!(r_min > 0.0 && r_min < 1.0 && r_max > 1.0))
        throw std::invalid_argument(
            "SolveConfig: need 0 < r_min < 1 < r_max");
    if (!(rel_tol > 0.0 && abs_tol > 0.0))
        throw std::invalid_argument("SolveConfig: tolerances must be positive");
    if (max_steps < 1 || points_per_decade < 2)
        throw std::invalid_argument("SolveConfig: invalid step/grid caps");
}

RadialProfile solve_from_peak(double alpha0, const Dimension& dim,
                              const SolveConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(alpha0) || alpha0 > 700.0)
        throw std::invalid_argument(
            "solve_from_peak: alpha0 must be finite and <= 700 (e^U in "
            "double precision)");
    const int n = dim.n;
    const double ea = std::exp(alpha0);

    // log grid 10^{k/ppd} containing r = 1 at k = 0
    const double ppd = cfg.points_per_decade;
    const long k_min = std::lround(std::ceil(std::log10(cfg.r_min) * ppd - 1e-9));
    const long k_max = std::lround(std::floor(std::log10(cfg.r_max) * ppd + 1e-9));
    const std::size_t m = static_cast<std::size_t>(k_max - k_min + 1);
    const std::size_t i1 = static_cast<std::size_t>(-k_min); // index of r = 1

    RadialProfile p;
    p.dim = dim;
    p.grid.resize(m);
    p.U.resize(m);
    p.rUprime.resize(m);
    std::vector<double> M(m, 0.0); // signed mass from r = 1
    for (std::size_t i = 0; i < m; ++i)
        p.grid[i] = std::pow(10.0, (k_min + static_cast<long>(i)) / ppd);
    p.grid[i1] = 1.0;
    p.U[i1] = alpha0;
    p.rUprime[i1] = 0.0;

    auto deriv = [n](double s, const Vec3& y) -> Vec3 {
        const double rhs = std::exp(n * s + y[0]); // r^n e^U
        return {sign_pow(y[1], 1.0 / (n - 1)), -rhs, rhs};
    };
    const RkOptions opt{cfg.rel_tol, cfg.abs_tol, cfg.max_steps};

    // one local-series step across the degenerate peak:
    // F(r) = -e^{a0}(r^n - 1)/n + O((r-1)^2), U from integrating U'
    const double h0 = 1e-6;
    auto bootstrap = [&](double r1) -> Vec3 {
        const double F1 = -ea * (std::pow(r1, n) - 1.0) / n;
        const double U1 = alpha0 - (n - 1.0) / n *
                                       std::exp(alpha0 / (n - 1.0)) *
                                       std::pow(h0, n / (n - 1.0));
        return {U1, F1, -F1};
    };

    auto run = [&](double r1, std::vector<std::size_t> idx) {
        std::vector<double> cps(idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            cps[j] = std::log(p.grid[idx[j]]);
        std::size_t next = 0;
        rk45_integrate(deriv, std::log(r1), bootstrap(r1), cps, opt,
                       [&](double, const Vec3& y) {
                           const std::size_t i = idx[next++];
                           p.U[i] = y[0];
                           p.rUprime[i] = sign_pow(y[1], 1.0 / (n - 1));
                           M[i] = y[2];
                       });
    };

    std::vector<std::size_t> outward, inward;
    for (std::size_t i = i1 + 1; i < m; ++i) outward.push_back(i);
    for (std::size_t i = i1; i-- > 0;) inward.push_back(i);
    if (!outward.empty()) run(1.0 + h0, outward);
    if (!inward.empty()) run(1.0 - h0, inward);

    p.mass_cum.resize(m);
    const double area = dim.sphere_area();
    for (std::size_t i = 0; i < m; ++i)
        p.mass_cum[i] = area * (M[i] - M[0]);
    return p;
}

std::vector<double> integrate_cauchy(double r0, double alpha0, double alpha1,
                                     const Dimension& dim,
                                     const std::vector<double>& radii,
                                     double rel_tol, double abs_tol) {
    if (alpha1 == 0.0)
        throw std::invalid_argument("integrate_cauchy: alpha1 must be nonzero");
    const int n = dim.n;
    // integrate in r; F as second component, M unused
    auto deriv = [n](double r, const Vec3& y) -> Vec3 {
        const double rn1 = std::pow(r, n - 1);
        return {sign_pow(y[1] / rn1, 1.0 / (n - 1)), -rn1 * std::exp(y[0]),
                0.0};
    };
    const Vec3 y0{alpha0,
                  std::pow(r0, n - 1) * sign_pow(alpha1, double(n - 1)), 0.0};
    const RkOptions opt{rel_tol, abs_tol, 2'000'000};

    std::vector<double> out(radii.size());
    std::vector<double> below, above;
    std::vector<std::size_t> bi, ai;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < r0) {
            below.push_back(radii[i]);
            bi.push_back(i);
        } else if (radii[i] > r0) {
            above.push_back(radii[i]);
            ai.push_back(i);
        } else {
            out[i] = alpha0;
        }
    }
    // below: descending from r0
    std::reverse(below.begin(), below.end());
    std::reverse(bi.begin(), bi.end());
    std::size_t next = 0;
    if (!below.empty())
        rk45_integrate(deriv, r0, y0, below, opt,
                       [&](double, const Vec3& y) { out[bi[next++]] = y[0]; });
    next = 0;
    if (!above.empty())
        rk45_integrate(deriv, r0, y0, above, opt,
                       [&](double, const Vec3& y) { out[ai[next++]] = y[0]; });
    return out;
}

double picard_delta(const Dimension& dim, double M) {
    if (!(M > 1.0))
        throw std::invalid_argument("picard_delta: M must be > 1");
    const double n = dim.n;
    const double C_M = (1.0 + (n - 2.0) / (n - 1.0)) *
                       std::pow(4.0 * std::pow(M, 2.0 * n - 2.0),
                                (n - 2.0) / (n - 1.0));
    const double eM = std::exp(-M - 1.0);
    return std::min({1.0 / (3.0 * M * M * M),
                     eM / (2.0 * std::pow(M + 1.0, 3.0 * n - 3.0)),
                     eM / (2.0 * C_M * std::pow(M + 1.0, double(n)))});
}

namespace {

// cumulative integral from the center node, locally quadratic rule
std::vector<double> cumulative_from_center(const std::vector<double>& f,
                                           std::size_t c, double h) {
    const std::size_t N = f.size() - 1;
    std::vector<double> I(f.size(), 0.0);
    for (std::size_t j = c; j < N; ++j) {
        const double inc =
            (j + 2 <= N)
                ? h / 12.0 * (5.0 * f[j] + 8.0 * f[j + 1] - f[j + 2])
                : h / 12.0 * (-f[j - 1] + 8.0 * f[j] + 5.0 * f[j + 1]);
        I[j + 1] = I[j] + inc;
    }
    for (std::size_t j = c; j > 0; --j) {
        const double inc =
            (j >= 2) ? h / 12.0 * (5.0 * f[j] + 8.0 * f[j - 1] - f[j - 2])
                     : h / 12.0 * (-f[j + 1] + 8.0 * f[j] + 5.0 * f[j - 1]);
        I[j - 1] = I[j] - inc;
    }
    return I;
}

} // namespace

PicardResult picard_local_solve(double r0, double alpha0, double alpha1,
                                const Dimension& dim, int iters, double M) {
    if (!(M > 1.0))
        throw std::invalid_argument("picard_local_solve: M must be > 1");
    if (!(r0 >= 1.0 / M && r0 <= M))
        throw std::invalid_argument(
            "picard_local_solve: r0 outside [1/M, M]");
    if (!(alpha0 <= M))
        throw std::invalid_argument("picard_local_solve: alpha0 > M");
    if (!(std::fabs(alpha1) >= 1.0 / M && std::fabs(alpha1) <= M))
        throw std::invalid_argument(
            "picard_local_solve: |alpha1| outside [1/M, M]");
    if (iters < 2)
        throw std::invalid_argument("picard_local_solve: need iters >= 2");

    const int n = dim.n;
    const double delta = 0.9 * picard_delta(dim, M);
    const std::size_t N = 1 << 12; // panels, fixed so contraction is measured
                                   // on a deterministic discretization
    const double h = 2.0 * delta / N;
    const std::size_t c = N / 2;

    PicardResult res;
    res.delta = delta;
    res.grid.resize(N + 1);
    for (std::size_t j = 0; j <= N; ++j)
        res.grid[j] = r0 + (static_cast<double>(j) - c) * h;
    res.grid[c] = r0;

    const double B =
        std::pow(r0, n - 1) * sign_pow(alpha1, double(n - 1));
    std::vector<double> U(N + 1, alpha0), f(N + 1), g(N + 1);
    double prev_diff = -1.0;
    res.contracted = true;
    for (int it = 0; it < iters; ++it) {
        for (std::size_t j = 0; j <= N; ++j)
            f[j] = std::pow(res.grid[j], n - 1) * std::exp(U[j]);
        const auto inner = cumulative_from_center(f, c, h);
        for (std::size_t j = 0; j <= N; ++j) {
            const double arg = B - inner[j];
            if (arg * B <= 0.0)
                throw std::runtime_error(
                    "picard_local_solve: flux changed sign inside the "
                    "contraction interval (quadrature resolution bug)");
            g[j] = sign_pow(arg, 1.0 / (n - 1)) / res.grid[j];
        }
        const auto outer = cumulative_from_center(g, c, h);
        double diff = 0.0;
        for (std::size_t j = 0; j <= N; ++j) {
            const double v = alpha0 + outer[j];
            diff = std::max(diff, std::fabs(v - U[j]));
            U[j] = v;
        }
        res.iterations = it + 1;
        if (prev_diff > 1e-13 && diff > 1e-16) {
            const double q = diff / prev_diff;
            res.contraction_factors.push_back(q);
            if (q >= 1.0) res.contracted = false;
        }
        prev_diff = diff;
        if (diff < 1e-15 * std::max(1.0, std::fabs(alpha0)) && it >= 1) break;
    }
    res.U = std::move(U);
    return res;
}

double mass_of(const RadialProfile& profile, double from_r, double to_r) {
    const auto& grid = profile.grid;
    if (grid.size() < 2)
        throw std::invalid_argument("mass_of: profile too short");
    const double lo = grid.front() * (1.0 - 1e-12);
    const double hi = grid.back() * (1.0 + 1e-12);
    if (from_r < lo || to_r > hi || from_r > to_r)
        throw std::out_of_range("mass_of: interval outside the grid span");
    auto cum = [&](double r) {
        r = std::clamp(r, grid.front(), grid.back());
        auto it = std::upper_bound(grid.begin(), grid.end(), r);
        std::size_t i = static_cast<std::size_t>(it - grid.begin());
        if (i == 0) i = 1;
        if (i == grid.size()) i = grid.size() - 1;
        const double s0 = std::log(grid[i - 1]), s1 = std::log(grid[i]);
        const double t = (std::log(r) - s0) / (s1 - s0);
        return (1.0 - t) * profile.mass_cum[i - 1] + t * profile.mass_cum[i];
    };
    return std::max(0.0, cum(to_r) - cum(from_r));
}

SlopeEstimate asymptotic_slope(const RadialProfile& profile, ProfileEnd end) {
    const auto& grid = profile.grid;
    if (grid.size() < 4 || grid.back() < 100.0 * grid.front())
        throw std::invalid_argument(
            "asymptotic_slope: grid must span at least two decades");
    std::size_t lo, hi;
    if (end == ProfileEnd::Origin) {
        lo = 0;
        hi = 0;
        while (hi + 1 < grid.size() && grid[hi + 1] <= 10.0 * grid.front())
            ++hi;
    } else {
        hi = grid.size() - 1;
        lo = hi;
        while (lo > 0 && grid[lo - 1] >= grid.back() / 10.0) --lo;
    }
    if (hi - lo < 2)
        throw std::invalid_argument(
            "asymptotic_slope: too few nodes in the fit decade");
    double mean = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) mean += profile.rUprime[i];
    mean /= static_cast<double>(hi - lo + 1);
    double dev = 0.0;
    for (std::size_t i = lo; i <= hi; ++i)
        dev = std::max(dev, std::fabs(profile.rUprime[i] - mean));
    return {mean, dev};
}

MassReport measure(const RadialProfile& profile) {
    const Dimension& dim = profile.dim;
    const int n = dim.n;
    const auto so = asymptotic_slope(profile, ProfileEnd::Origin);
    const auto si = asymptotic_slope(profile, ProfileEnd::Infinity);

    MassReport rep;
    rep.n = n;
    rep.omega_n = dim.omega_n;
    rep.slope_origin = so.slope;
    rep.slope_infinity = si.slope;
    rep.slope_origin_unc = so.uncertainty;
    rep.slope_infinity_unc = si.uncertainty;
    rep.gamma_num = slope_to_gamma(so.slope, dim);
    rep.gamma_inf_num = slope_to_gamma(-si.slope, dim);

    // analytic power-law tails: e^U ~ K r^s beyond the grid
    const double area = dim.sphere_area();
    double tail_in = 0.0, tail_out = 0.0;
    if (n + so.slope > 1e-2) {
        const double r0 = profile.grid.front();
        tail_in = area * std::exp(profile.U.front() + n * std::log(r0)) /
                  (n + so.slope);
    }
    if (n + si.slope < -1e-2) {
        const double r1 = profile.grid.back();
        tail_out = area * std::exp(profile.U.back() + n * std::log(r1)) /
                   -(n + si.slope);
    }
    rep.total_mass = profile.mass_cum.back() + tail_in + tail_out;
    rep.eq921_residual = eq921_residual(rep.gamma_num, rep.gamma_inf_num, dim);
    return rep;
}

} // namespace nliouville
