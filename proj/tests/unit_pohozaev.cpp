#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "nliouville/closed_forms.hpp"
#include "nliouville/pohozaev.hpp"
#include "nliouville/quantization.hpp"
#include "nliouville/radial_ode.hpp"

using namespace nliouville;
using std::numbers::pi;

TEST_CASE("annulus identity balances on sampled closed forms") {
    for (int n : {2, 3}) {
        const auto f = ClosedFormFamily::entire(n, 1.0);
        const auto p = sample_profile(f, 1e-6, 1e6, 256);
        for (auto [eps, R] : {std::pair{0.01, 1.0}, {0.5, 2.0}, {1.0, 300.0}}) {
            const auto ch = check_annulus(p, 0.0, eps, R, f.dim);
            CHECK(std::fabs(ch.residual) <
                  1e-5 * std::max(1.0, std::fabs(ch.interior_integral)));
        }
    }
    const auto fw = ClosedFormFamily::singular_radial(2, 1.5, 1.0);
    const auto pw = sample_profile(fw, 1e-6, 1e6, 256);
    const auto ch = check_annulus(pw, 1.5, 0.1, 10.0, fw.dim);
    CHECK(std::fabs(ch.residual) <
          1e-5 * std::max(1.0, std::fabs(ch.interior_integral)));
}

TEST_CASE("check_annulus input validation") {
    const auto f = ClosedFormFamily::entire(2, 1.0);
    const auto p = sample_profile(f, 1e-3, 1e3, 32);
    CHECK_THROWS_AS(check_annulus(p, 0.0, 5.0, 1.0, f.dim),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_annulus(p, 0.0, 0.0, 1.0, f.dim),
                    std::invalid_argument);
}

TEST_CASE("boundary_functional limits on a solved profile") {
    const auto d2 = Dimension::of(2);
    const double gamma = 8.0 * pi;
    const auto p = solve_from_peak(alpha0_from_gamma(gamma, d2), d2);
    const auto rep = measure(p);
    const double k = 0.5 / (2.0 * pi); // (n-1)/n * (n w_n)^{-1/(n-1)}, n=2
    const double lim0 = k * gamma * gamma;
    const double limi = k * rep.gamma_inf_num * rep.gamma_inf_num;
    CHECK(boundary_functional(p, 0.0, 1e-6, d2) ==
          doctest::Approx(lim0).epsilon(1e-3));
    CHECK(boundary_functional(p, 0.0, 1e6, d2) ==
          doctest::Approx(limi).epsilon(1e-3));
}

TEST_CASE("mass_balance_residual vanishes on quantized pairs") {
    for (int n : {2, 3, 4}) {
        const auto dim = Dimension::of(n);
        for (double g : {-1.0, 0.0, 5.0, 40.0}) {
            const double gi = mass_equation_root(g, dim);
            CHECK(std::fabs(mass_balance_residual(g, gi, 0.0, dim)) <
                  1e-9 * std::max(1.0, std::fabs(gi)));
        }
        // and does not vanish off the root
        CHECK(std::fabs(mass_balance_residual(
                  0.0, mass_equation_root(0.0, dim) + 1.0, 0.0, dim)) > 1e-3);
    }
}
