#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "nliouville/quantization.hpp"

using namespace nliouville;
using std::numbers::pi;

TEST_CASE("mass_equation_root: closed values") {
    const auto d2 = Dimension::of(2);
    const auto d3 = Dimension::of(3);
    // gamma = 0 root is c_n w_n: 8 pi at n=2, 81 pi at n=3
    CHECK(mass_equation_root(0.0, d2) ==
          doctest::Approx(8.0 * pi).epsilon(1e-12));
    CHECK(mass_equation_root(0.0, d3) ==
          doctest::Approx(81.0 * pi).epsilon(1e-12));
    // n=2 law: root = gamma + 8 pi
    for (double g : {-10.0, -1.0, 0.5, 25.0, 99.0})
        CHECK(mass_equation_root(g, d2) ==
              doctest::Approx(g + 8.0 * pi).epsilon(1e-13));
}

TEST_CASE("mass_equation_root: residual and range") {
    for (int n : {2, 3, 4, 5}) {
        const auto dim = Dimension::of(n);
        const double crit = std::pow(double(n), n) * dim.omega_n;
        for (double g : {-0.9 * crit, -1.0, 0.0, 3.0, 250.0}) {
            const double root = mass_equation_root(g, dim);
            CHECK(root > crit);
            CHECK(std::fabs(eq921_residual(g, root, dim)) <
                  1e-12 * std::max(1.0, std::fabs(root)));
        }
        // root is strictly increasing in gamma
        CHECK(mass_equation_root(1.0, dim) < mass_equation_root(2.0, dim));
        CHECK_THROWS_AS(mass_equation_root(-1.01 * crit, dim),
                        std::invalid_argument);
    }
}

TEST_CASE("theorem3_mass values") {
    const auto d2 = Dimension::of(2);
    const auto d3 = Dimension::of(3);
    CHECK(theorem3_mass(0.0, d2) == doctest::Approx(8.0 * pi).epsilon(1e-15));
    CHECK(theorem3_mass(3.0, d2) == doctest::Approx(32.0 * pi).epsilon(1e-15));
    CHECK(theorem3_mass(0.0, d3) == doctest::Approx(81.0 * pi).epsilon(1e-14));
    // n=3, alpha=1: 81 pi * (1+1)^2 = 324 pi
    CHECK(theorem3_mass(1.0, d3) ==
          doctest::Approx(324.0 * pi).epsilon(1e-14));
    CHECK_THROWS_AS(theorem3_mass(-1.0, d2), std::invalid_argument);
}

TEST_CASE("alpha0_from_gamma spot values and monotonicity") {
    const auto d2 = Dimension::of(2);
    const auto d3 = Dimension::of(3);
    CHECK(alpha0_from_gamma(8.0 * pi, d2) ==
          doctest::Approx(std::log(16.0)).epsilon(1e-14));
    CHECK(alpha0_from_gamma(4.0 * pi, d3) ==
          doctest::Approx(std::log(11.0 / 3.0)).epsilon(1e-14));
    double prev = alpha0_from_gamma(0.01, d2);
    for (double g = 0.5; g < 60.0; g += 0.5) {
        const double a = alpha0_from_gamma(g, d2);
        CHECK(a > prev);
        prev = a;
    }
    CHECK_THROWS_AS(alpha0_from_gamma(0.0, d2), std::invalid_argument);
    CHECK_THROWS_AS(alpha0_from_gamma(-1.0, d3), std::invalid_argument);
}

TEST_CASE("verify_quantization passes a consistent report, fails a corrupt one") {
    const auto d2 = Dimension::of(2);
    MassReport rep;
    rep.n = 2;
    rep.omega_n = d2.omega_n;
    rep.gamma_num = 8.0 * pi;
    rep.gamma_inf_num = mass_equation_root(8.0 * pi, d2);
    rep.total_mass = rep.gamma_num + rep.gamma_inf_num;
    const auto ok = verify_quantization(rep, 8.0 * pi, d2, 1e-6);
    CHECK(ok.pass());
    MassReport bad = rep;
    bad.total_mass *= 0.5;
    CHECK_FALSE(verify_quantization(bad, 8.0 * pi, d2, 1e-6).pass());
    MassReport off = rep;
    off.gamma_inf_num += 1.0;
    CHECK_FALSE(verify_quantization(off, 8.0 * pi, d2, 1e-6).pass());
}
