#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "nliouville/dimension.hpp"

using namespace nliouville;
using std::numbers::pi;

TEST_CASE("ball_volume matches the closed forms in low dimension") {
    CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ball_volume(2) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-15));
    CHECK(ball_volume(4) == doctest::Approx(pi * pi / 2.0).epsilon(1e-15));
    CHECK(ball_volume(5) ==
          doctest::Approx(8.0 * pi * pi / 15.0).epsilon(1e-15));
    CHECK_THROWS_AS(ball_volume(0), std::invalid_argument);
    CHECK_THROWS_AS(ball_volume(-3), std::invalid_argument);
}

TEST_CASE("Dimension carries n and omega_n; sphere_area = n omega_n") {
    const auto d3 = Dimension::of(3);
    CHECK(d3.n == 3);
    CHECK(d3.omega_n == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-15));
    CHECK(d3.sphere_area() == doctest::Approx(4.0 * pi).epsilon(1e-15));
    CHECK_THROWS_AS(Dimension::of(1), std::invalid_argument);
}

TEST_CASE("slope_to_gamma spot values") {
    const auto d2 = Dimension::of(2);
    const auto d3 = Dimension::of(3);
    // n=2: gamma = 2 pi s
    CHECK(slope_to_gamma(4.0, d2) == doctest::Approx(8.0 * pi).epsilon(1e-15));
    // n=3: gamma = 4 pi |s| s
    CHECK(slope_to_gamma(-3.0, d3) ==
          doctest::Approx(-36.0 * pi).epsilon(1e-15));
    CHECK(slope_to_gamma(0.0, d2) == 0.0);
}

TEST_CASE("gamma_to_slope inverts slope_to_gamma on both signs") {
    for (int n : {2, 3, 4, 5}) {
        const auto dim = Dimension::of(n);
        for (double s : {-7.5, -1.0, -1e-3, 1e-3, 0.25, 3.0, 40.0}) {
            const double g = slope_to_gamma(s, dim);
            CHECK(gamma_to_slope(g, dim) ==
                  doctest::Approx(s).epsilon(1e-14));
        }
        for (double g : {-5.0, -0.1, 0.1, 12.0, 300.0}) {
            CHECK(slope_to_gamma(gamma_to_slope(g, dim), dim) ==
                  doctest::Approx(g).epsilon(1e-14));
        }
    }
}

TEST_CASE("slope_to_gamma is odd and strictly increasing") {
    const auto d4 = Dimension::of(4);
    double prev = slope_to_gamma(-10.0, d4);
    for (double s = -9.5; s <= 10.0; s += 0.5) {
        const double g = slope_to_gamma(s, d4);
        CHECK(g > prev);
        CHECK(slope_to_gamma(-s, d4) == doctest::Approx(-g).epsilon(1e-15));
        prev = g;
    }
}

TEST_CASE("c_n values") {
    CHECK(c_n(Dimension::of(2)) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(c_n(Dimension::of(3)) == doctest::Approx(60.75).epsilon(1e-15));
    // n=4: 4 * (16/3)^3
    CHECK(c_n(Dimension::of(4)) ==
          doctest::Approx(4.0 * std::pow(16.0 / 3.0, 3)).epsilon(1e-14));
}

TEST_CASE("critical mass threshold and admissibility") {
    const auto d2 = Dimension::of(2);
    // n=2, alpha=0: n^n w_n = 4 pi
    CHECK(SingularWeights::critical_mass(0.0, d2) ==
          doctest::Approx(4.0 * pi).epsilon(1e-15));
    SingularWeights w;
    w.alpha = 0.0;
    w.gamma = -4.0 * pi + 1e-6;
    CHECK(w.admissible(d2));
    w.gamma = -4.0 * pi - 1e-6;
    CHECK_FALSE(w.admissible(d2));
    w.gamma = 0.0;
    w.gamma_inf = 4.0 * pi + 1e-6;
    CHECK(w.admissible(d2));
    w.gamma_inf = 4.0 * pi - 1e-6;
    CHECK_FALSE(w.admissible(d2));
}
