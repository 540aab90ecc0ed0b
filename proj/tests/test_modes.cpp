#include "dce/modes.hpp"

#include <cmath>

#include "dce/random.hpp"
#include "doctest.h"

using namespace dce;

namespace {

double amp_distance(const ScatteringAmplitudes& a, const ScatteringAmplitudes& b) {
  return std::max(std::max(std::abs(a.s_plus - b.s_plus), std::abs(a.s_minus - b.s_minus)),
                  std::max(std::abs(a.r_plus - b.r_plus), std::abs(a.r_minus - b.r_minus)));
}

}  // namespace

TEST_CASE("mode solver reproduces the pure-delta coefficients") {
  const ScatteringAmplitudes sa = solve_scattering(1.0, 0.0, 1.0);
  CHECK(std::abs(sa.s_plus - Complex(0.5, -0.5)) <= 1e-15);
  CHECK(std::abs(sa.r_plus - Complex(-0.5, -0.5)) <= 1e-15);
  CHECK(std::abs(sa.r_minus - Complex(-0.5, -0.5)) <= 1e-15);
}

TEST_CASE("mode solver equals the closed form off the singular couplings") {
  const ScatteringAmplitudes solved = solve_scattering(2.0, 0.5, 1.3);
  const ScatteringAmplitudes closed = amplitudes(DeltaDeltaPrime{2.0, 0.5}, 1.3);
  CHECK(amp_distance(solved, closed) <= 1e-12);
}

TEST_CASE("mu = 0 solver gives the frequency-independent coefficients") {
  for (double w : {0.2, 1.0, 7.3}) {
    const ScatteringAmplitudes sa = solve_scattering(0.0, 2.0, w);
    CHECK(std::abs(sa.s_plus - Complex(-0.6)) <= 1e-14);
    CHECK(std::abs(sa.r_plus - Complex(0.8)) <= 1e-14);
    CHECK(std::abs(sa.r_minus - Complex(-0.8)) <= 1e-14);
  }
}

TEST_CASE("matching residuals") {
  SUBCASE("pure-delta jump condition is the lambda = 0 matching condition") {
    const Complex c(0.7, -0.2);
    const double mu = 1.9;
    MatchingData m;
    m.phi_left = c;
    m.phi_right = c;
    m.dphi_left = Complex(0.1, 0.4);
    m.dphi_right = m.dphi_left + 2.0 * mu * c;
    const auto [r1, r2] = matching_residual(mu, 0.0, m);
    CHECK(r1 == 0.0);
    CHECK(r2 <= 1e-15);
  }
  SUBCASE("modes built from the closed form satisfy the conditions") {
    const ScatteringAmplitudes sa = amplitudes(DeltaDeltaPrime{1.0, 0.5}, 0.8);
    for (Incidence inc : {Incidence::left, Incidence::right}) {
      const auto [r1, r2] =
          matching_residual(1.0, 0.5, boundary_data(mode_from_amplitudes(sa, inc)));
      CHECK(r1 <= 1e-12);
      CHECK(r2 <= 1e-12);
    }
  }
  SUBCASE("a deliberate violation is reported at its size") {
    const ScatteringAmplitudes sa = amplitudes(DeltaDeltaPrime{1.0, 0.5}, 0.8);
    MatchingData m = boundary_data(mode_from_amplitudes(sa, Incidence::left));
    m.phi_right += 0.1;
    const auto [r1, r2] = matching_residual(1.0, 0.5, m);
    CHECK(r1 == doctest::Approx(0.1).epsilon(1e-10));
    (void)r2;
  }
  SUBCASE("singular couplings are rejected") {
    CHECK_THROWS_AS(matching_residual(1.0, 1.0, MatchingData{}), std::domain_error);
    CHECK_THROWS_AS(solve_mode(1.0, -1.0, 0.5, Incidence::left), std::domain_error);
  }
}

TEST_CASE("U(lambda) reformulation") {
  SUBCASE("lambda = 0") {
    // [[i, 1], [1, i]] / (1 - i) = [[(-1+i)/2, (1+i)/2], [(1+i)/2, (-1+i)/2]]
    const Mat2 u = u_matrix(0.0);
    CHECK(std::abs(u.a - Complex(-0.5, 0.5)) <= 1e-15);
    CHECK(std::abs(u.b - Complex(0.5, 0.5)) <= 1e-15);
    CHECK(std::abs(u.c - Complex(0.5, 0.5)) <= 1e-15);
    CHECK(std::abs(u.d - Complex(-0.5, 0.5)) <= 1e-15);
  }
  SUBCASE("lambda = 1 is diagonal") {
    // [[2+i, 0], [0, -2+i]] / (2-i); (2+i)/(2-i) = (3+4i)/5 and
    // (-2+i)/(2-i) = -1.
    const Mat2 u = u_matrix(1.0);
    CHECK(u.b == Complex(0.0));
    CHECK(u.c == Complex(0.0));
    CHECK(std::abs(u.a - Complex(0.6, 0.8)) <= 1e-15);
    CHECK(std::abs(u.d - Complex(-1.0, 0.0)) <= 1e-15);
  }
  SUBCASE("unit determinant modulus") {
    for (double lam : {0.0, 0.5, 1.0, 2.0}) {
      const Mat2 u = u_matrix(lam);
      CHECK(std::abs(u.a * u.d - u.b * u.c) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  SUBCASE("residual vanishes on solved modes") {
    for (auto [mu, lam, w] : {std::tuple{1.0, 0.5, 0.8}, std::tuple{3.0, -0.7, 2.0}}) {
      const ModeSolution mode = solve_mode(mu, lam, w, Incidence::left);
      CHECK(u_matrix_residual(mu, lam, w, mode) <= 1e-12);
      const ModeSolution right = solve_mode(mu, lam, w, Incidence::right);
      CHECK(u_matrix_residual(mu, lam, w, right) <= 1e-12);
    }
  }
  SUBCASE("residual detects a perturbed boundary value") {
    const ModeSolution mode = solve_mode(1.0, 0.5, 0.8, Incidence::left);
    MatchingData m = boundary_data(mode);
    m.phi_right += 0.1;
    CHECK(u_matrix_residual(1.0, 0.5, m) > 0.05);
  }
}

TEST_CASE("lambda = 1 imposes Robin on the right and Dirichlet on the left") {
  SUBCASE("residuals vanish for closed-form modes") {
    const ScatteringAmplitudes sa = amplitudes(DeltaDeltaPrime{1.0, 1.0}, 0.5);
    for (Incidence inc : {Incidence::left, Incidence::right}) {
      const auto [robin, dirichlet] =
          robin_dirichlet_residual(1.0, 0.5, mode_from_amplitudes(sa, inc));
      CHECK(robin <= 1e-12);
      CHECK(dirichlet <= 1e-12);
    }
  }
  SUBCASE("mu -> infinity pushes the right face to Dirichlet too") {
    const ScatteringAmplitudes sa = amplitudes(DeltaDeltaPrime{1e6, 1.0}, 1.0);
    const MatchingData m = boundary_data(mode_from_amplitudes(sa, Incidence::right));
    CHECK(std::abs(m.phi_right) <= 1e-5);
  }
  SUBCASE("mu -> 0 is the Neumann limit") {
    const ScatteringAmplitudes sa = amplitudes(DeltaDeltaPrime{1e-6, 1.0}, 1.0);
    CHECK(neumann_residual(mode_from_amplitudes(sa, Incidence::right)) <= 1e-5);
  }
  SUBCASE("validation") {
    const ScatteringAmplitudes sa = amplitudes(DeltaDeltaPrime{1.0, 1.0}, 0.5);
    CHECK_THROWS_AS(
        robin_dirichlet_residual(0.0, 0.5, mode_from_amplitudes(sa, Incidence::left)),
        std::invalid_argument);
  }
}

TEST_CASE("seeded battery: solver vs closed form, matching, U-form, flux") {
  Rng rng(45);
  for (int i = 0; i < 500; ++i) {
    const double mu = rng.uniform(1e-6, 10.0);
    double lam = rng.uniform(-3.0, 3.0);
    while (std::abs(std::abs(lam) - 1.0) < 1e-6) lam = rng.uniform(-3.0, 3.0);
    const double w = rng.uniform(1e-3, 10.0);

    CHECK(amp_distance(solve_scattering(mu, lam, w),
                       amplitudes(DeltaDeltaPrime{mu, lam}, w)) <= 1e-12);
    for (Incidence inc : {Incidence::left, Incidence::right}) {
      const ModeSolution mode = solve_mode(mu, lam, w, inc);
      CHECK(flux_residual(mode) <= 1e-12);
      const auto [r1, r2] = matching_residual(mu, lam, boundary_data(mode));
      CHECK(r1 <= 1e-12);
      CHECK(r2 <= 1e-12);
      CHECK(u_matrix_residual(mu, lam, w, mode) <= 1e-12);
    }
  }
}

TEST_CASE("the matching-condition singularity at lambda = ±1 is removable") {
  for (double lam : {1.0, -1.0}) {
    const ScatteringAmplitudes at = amplitudes(DeltaDeltaPrime{1.7, lam}, 0.9);
    for (double side : {-1e-6, 1e-6}) {
      const ScatteringAmplitudes near = solve_scattering(1.7, lam + side, 0.9);
      CHECK(amp_distance(near, at) <= 1e-4);
    }
  }
}
