#include "dce/motion.hpp"

#include <cmath>
#include <numbers>

#include "dce/random.hpp"
#include "doctest.h"

using namespace dce;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("displacement envelope") {
  const MotionProfile p{0.05, kPi, 10.0};  // omega0 tau = 10 pi = 2 pi * 5
  CHECK(displacement(p, 0.0) == p.eps);
  CHECK(std::abs(displacement(p, kPi / (2.0 * p.omega0))) < 1e-16);
  CHECK(displacement(p, p.tau) ==
        doctest::Approx(p.eps * std::exp(-1.0)).epsilon(1e-12));
  for (double t : {-3.0, 0.2, 7.7, 40.0})
    CHECK(std::abs(displacement(p, t)) <= p.eps);
}

TEST_CASE("transform at zero frequency") {
  const MotionProfile p{0.01, 1.3, 42.0};
  CHECK(fourier_g(p, 0.0) ==
        doctest::Approx(2.0 * p.tau / (1.0 + p.omega0 * p.omega0 * p.tau * p.tau))
            .epsilon(1e-15));
}

TEST_CASE("transform is even and positive") {
  const MotionProfile p{0.01, 0.8, 30.0};
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double w = rng.uniform(-10.0, 10.0);
    const double g = fourier_g(p, w);
    CHECK(g > 0.0);
    CHECK(fourier_g(p, -w) == g);
  }
}

TEST_CASE("peak height approaches tau from above") {
  double prev = 1e300;
  for (double tau : {1e2, 1e3, 1e4}) {
    const MotionProfile p{0.01, 1.0, tau};
    const double ratio = fourier_g(p, p.omega0) / tau;
    CHECK(ratio > 1.0);
    CHECK(ratio < prev);
    prev = ratio;
  }
  CHECK(prev == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("time-domain quadrature reproduces the closed-form transform") {
  // Oscillatory panels carry a round-off floor of ~50 eps Int|f|, so the
  // absolute target must stay above ~1e-13 for the largest tau used here.
  QuadratureConfig quad;
  quad.rel_tol = 1e-10;
  quad.abs_tol = 1e-12;
  quad.max_subdivisions = 50000;

  SUBCASE("on the peak") {
    const MotionProfile p{0.3, 1.0, 20.0};
    CHECK(fourier_g_numeric(p, 1.0, quad) ==
          doctest::Approx(fourier_g(p, 1.0)).epsilon(1e-8));
  }
  SUBCASE("zero frequency against the closed form") {
    const MotionProfile p{0.01, 1.0, 20.0};
    CHECK(fourier_g_numeric(p, 0.0, quad) ==
          doctest::Approx(2.0 * p.tau / (1.0 + p.tau * p.tau)).epsilon(1e-8));
  }
  SUBCASE("far off peak") {
    const MotionProfile p{0.01, 1.0, 50.0};
    CHECK(fourier_g_numeric(p, 5.0, quad) ==
          doctest::Approx(fourier_g(p, 5.0)).epsilon(1e-8));
  }
}

TEST_CASE("seeded grid: closed form vs quadrature within 1e-8 relative") {
  QuadratureConfig quad;
  quad.rel_tol = 1e-10;
  quad.abs_tol = 1e-12;
  quad.max_subdivisions = 50000;
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const MotionProfile p{0.01, 1.0, rng.uniform(10.0, 60.0)};
    const double w = rng.uniform(0.0, 5.0);
    const double closed = fourier_g(p, w);
    CHECK(std::abs(fourier_g_numeric(p, w, quad) - closed) <= 1e-8 * closed);
  }
}

TEST_CASE("peak weight converges to pi/2") {
  SUBCASE("tight at tau = 1e4") {
    const MotionProfile p{0.01, 1.0, 1e4};
    CHECK(std::abs(peak_weight(p, 0.5) - kPi / 2.0) <= 1e-3);
  }
  SUBCASE("loose at tau = 1e2") {
    const MotionProfile p{0.01, 1.0, 1e2};
    CHECK(std::abs(peak_weight(p, 0.5) - kPi / 2.0) <= 2e-1);
  }
  SUBCASE("vanishing window") {
    const MotionProfile p{0.01, 1.0, 1e2};
    CHECK(peak_weight(p, 1e-6) < 1e-3);
  }
  SUBCASE("monotone convergence in tau at fixed window") {
    // The weight approaches pi/2 from above: the cross term between the two
    // peaks of G contributes +pi/(2 tau^2), dominating the O(1/tau^3) tail
    // deficit of the squared peak itself.
    double prev = 1e300;
    for (double tau : {1e2, 1e3, 1e4}) {
      const MotionProfile p{0.01, 1.0, tau};
      const double gap = peak_weight(p, 0.5) - kPi / 2.0;
      CHECK(gap > 0.0);
      CHECK(gap < prev);
      prev = gap;
    }
  }
}

TEST_CASE("profile validation and warnings") {
  CHECK_THROWS_AS(validate_profile(MotionProfile{0.0, 1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_profile(MotionProfile{0.1, -1.0, 1.0}),
                  std::invalid_argument);
  CHECK(profile_warnings(MotionProfile{0.01, 1.0, 1e3}).empty());
  CHECK(profile_warnings(MotionProfile{0.5, 1.0, 1e3}).size() == 1);   // relativistic
  CHECK(profile_warnings(MotionProfile{0.01, 1.0, 5.0}).size() == 1);  // omega0 tau < 10
}
