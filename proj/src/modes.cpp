#include "dce/modes.hpp"

#include <cmath>
#include <stdexcept>

namespace dce {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_couplings(double mu, double lambda) {
  if (std::isnan(mu) || mu < 0.0)
    throw std::invalid_argument("modes: mu must be >= 0");
  if (!std::isfinite(lambda))
    throw std::invalid_argument("modes: lambda must be finite");
}

void check_transfer_form(double lambda) {
  if (std::abs(1.0 - lambda * lambda) <= 1e-12)
    throw std::domain_error(
        "matching conditions are singular at lambda = ±1; use "
        "robin_dirichlet_residual / the closed-form amplitudes there");
}

// Matching-condition coefficients phi(0+) = A phi(0-),
// phi'(0+) = invA phi'(0-) + B phi(0-).
struct Transfer {
  double A;
  double invA;
  double B;
};

Transfer transfer_coefficients(double mu, double lambda) {
  return {(1.0 + lambda) / (1.0 - lambda), (1.0 - lambda) / (1.0 + lambda),
          2.0 * mu / (1.0 - lambda * lambda)};
}

// Cramer solve of [[a, b], [c, d]] x = rhs.
std::pair<Complex, Complex> solve2(Complex a, Complex b, Complex c, Complex d,
                                   Complex r1, Complex r2) {
  const Complex det = a * d - b * c;
  if (std::abs(det) == 0.0)
    throw std::runtime_error("solve_mode: singular matching system");
  return {(r1 * d - b * r2) / det, (a * r2 - r1 * c) / det};
}

}  // namespace

MatchingData boundary_data(const ModeSolution& mode) {
  const Complex iw = kI * mode.omega;
  MatchingData m;
  if (mode.incidence == Incidence::left) {
    // x<0: e^{iwx} + r e^{-iwx};  x>0: t e^{iwx}
    m.phi_left = 1.0 + mode.reflected;
    m.dphi_left = iw * (1.0 - mode.reflected);
    m.phi_right = mode.transmitted;
    m.dphi_right = iw * mode.transmitted;
  } else {
    // x>0: e^{-iwx} + r e^{iwx};  x<0: t e^{-iwx}
    m.phi_right = 1.0 + mode.reflected;
    m.dphi_right = iw * (mode.reflected - 1.0);
    m.phi_left = mode.transmitted;
    m.dphi_left = -iw * mode.transmitted;
  }
  return m;
}

ModeSolution mode_from_amplitudes(const ScatteringAmplitudes& sa, Incidence inc) {
  ModeSolution mode;
  mode.incidence = inc;
  mode.omega = sa.omega;
  if (inc == Incidence::left) {
    mode.reflected = sa.r_minus;
    mode.transmitted = sa.s_plus;
  } else {
    mode.reflected = sa.r_plus;
    mode.transmitted = sa.s_minus;
  }
  return mode;
}

double flux_residual(const ModeSolution& mode) {
  return std::abs(std::norm(mode.reflected) + std::norm(mode.transmitted) - 1.0);
}

std::pair<double, double> matching_residual(double mu, double lambda,
                                            const MatchingData& m) {
  check_couplings(mu, lambda);
  check_transfer_form(lambda);
  const Transfer t = transfer_coefficients(mu, lambda);
  const double r1 = std::abs(m.phi_right - t.A * m.phi_left);
  const double r2 =
      std::abs(m.dphi_right - t.invA * m.dphi_left - t.B * m.phi_left);
  return {r1, r2};
}

ModeSolution solve_mode(double mu, double lambda, double omega, Incidence inc) {
  check_couplings(mu, lambda);
  check_transfer_form(lambda);
  if (!(omega > 0.0)) throw std::domain_error("solve_mode: omega must be > 0");

  const Transfer t = transfer_coefficients(mu, lambda);
  const Complex iw = kI * omega;
  ModeSolution mode;
  mode.incidence = inc;
  mode.omega = omega;

  if (inc == Incidence::left) {
    // Unknowns (r-, s+); phi- = 1+r, phi-' = iw(1-r), phi+ = s, phi+' = iw s:
    //   A (1 + r) - s                 = 0
    //   invA iw (1 - r) + B (1 + r)   = iw s
    auto [r, s] = solve2(Complex(t.A), Complex(-1.0),
                         Complex(t.B) - t.invA * iw, -iw,
                         Complex(-t.A), -Complex(t.B) - t.invA * iw);
    mode.reflected = r;
    mode.transmitted = s;
  } else {
    // Unknowns (r+, s-); phi+ = 1+r, phi+' = iw(r-1), phi- = s, phi-' = -iw s:
    //   1 + r       = A s
    //   iw (r - 1)  = -invA iw s + B s
    auto [r, s] = solve2(Complex(1.0), Complex(-t.A),
                         iw, t.invA * iw - Complex(t.B),
                         Complex(-1.0), iw);
    mode.reflected = r;
    mode.transmitted = s;
  }
  return mode;
}

ScatteringAmplitudes solve_scattering(double mu, double lambda, double omega) {
  const ModeSolution left = solve_mode(mu, lambda, omega, Incidence::left);
  const ModeSolution right = solve_mode(mu, lambda, omega, Incidence::right);
  ScatteringAmplitudes sa;
  sa.omega = omega;
  sa.s_plus = left.transmitted;
  sa.r_minus = left.reflected;
  sa.s_minus = right.transmitted;
  sa.r_plus = right.reflected;
  return sa;
}

Mat2 u_matrix(double lambda) {
  if (!std::isfinite(lambda))
    throw std::invalid_argument("u_matrix: lambda must be finite");
  const double l2 = lambda * lambda;
  const Complex den(1.0 + l2, -1.0);
  return Mat2{Complex(2.0 * lambda, 1.0), Complex(1.0 - l2),
              Complex(1.0 - l2), Complex(-2.0 * lambda, 1.0)} *
         (1.0 / den);
}

double u_matrix_residual(double mu, double lambda, const MatchingData& m) {
  check_couplings(mu, lambda);
  const Complex phi_p1 = mu * m.phi_right + kI * m.dphi_right;
  const Complex phi_p2 = mu * m.phi_left - kI * m.dphi_left;
  const Complex phi_m1 = mu * m.phi_right - kI * m.dphi_right;
  const Complex phi_m2 = mu * m.phi_left + kI * m.dphi_left;
  const Mat2 u = u_matrix(lambda);
  const Complex r1 = phi_p1 - (u.a * phi_m1 + u.b * phi_m2);
  const Complex r2 = phi_p2 - (u.c * phi_m1 + u.d * phi_m2);
  return std::hypot(std::abs(r1), std::abs(r2));
}

double u_matrix_residual(double mu, double lambda, double omega,
                         const ModeSolution& mode) {
  if (omega != mode.omega)
    throw std::invalid_argument("u_matrix_residual: omega disagrees with the mode");
  return u_matrix_residual(mu, lambda, boundary_data(mode));
}

std::pair<double, double> robin_dirichlet_residual(double mu, double omega,
                                                   const ModeSolution& mode) {
  if (!(mu > 0.0))
    throw std::invalid_argument("robin_dirichlet_residual: mu must be > 0");
  if (omega != mode.omega)
    throw std::invalid_argument(
        "robin_dirichlet_residual: omega disagrees with the mode");
  const MatchingData m = boundary_data(mode);
  const double robin = std::abs(m.phi_right - (2.0 / mu) * m.dphi_right);
  const double dirichlet = std::abs(m.phi_left);
  return {robin, dirichlet};
}

double neumann_residual(const ModeSolution& mode) {
  return std::abs(boundary_data(mode).dphi_right);
}

}  // namespace dce
