#include "dce/scattering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dce {

namespace {

void check_omega(double omega) {
  if (!std::isfinite(omega)) throw std::domain_error("amplitudes: non-finite frequency");
}

void check_mu(double mu) {
  if (std::isnan(mu) || mu < 0.0)
    throw std::invalid_argument("mirror coupling mu must be >= 0");
}

// s±(w) = w (1-l^2) / (w (l^2+1) + i mu)
// r±(w) = (±2 w l - i mu) / (w (l^2+1) + i mu)
ScatteringAmplitudes delta_prime_amplitudes(double mu, double lambda, double omega) {
  if (mu == 0.0) {
    const double denom = 1.0 + lambda * lambda;
    const Complex s((1.0 - lambda * lambda) / denom, 0.0);
    const Complex r(2.0 * lambda / denom, 0.0);
    return {omega, s, s, r, -r};
  }
  const Complex den(omega * (lambda * lambda + 1.0), mu);
  const Complex s = omega * (1.0 - lambda * lambda) / den;
  const Complex rp = Complex(2.0 * omega * lambda, -mu) / den;
  const Complex rm = Complex(-2.0 * omega * lambda, -mu) / den;
  return {omega, s, s, rp, rm};
}

}  // namespace

double robin_phase(double mu, double omega) {
  if (!(mu > 0.0)) throw std::invalid_argument("robin_phase: mu must be > 0");
  return 2.0 * std::atan(2.0 * omega / mu);
}

std::function<double(double)> phase_dirichlet() {
  return [](double) { return std::numbers::pi; };
}

std::function<double(double)> phase_neumann() {
  return [](double) { return 0.0; };
}

std::function<double(double)> phase_robin(double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("phase_robin: mu must be > 0");
  return [mu](double omega) { return robin_phase(mu, omega); };
}

MirrorModel dirichlet_mirror() {
  return PerfectPhases{phase_dirichlet(), phase_dirichlet()};
}

MirrorModel neumann_mirror() {
  return PerfectPhases{phase_neumann(), phase_neumann()};
}

ScatteringAmplitudes amplitudes(const MirrorModel& model, double omega) {
  check_omega(omega);
  return std::visit(
      [omega](const auto& m) -> ScatteringAmplitudes {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PureDelta>) {
          check_mu(m.mu);
          // Identical to the delta-delta' mirror at lambda = 0.
          return delta_prime_amplitudes(m.mu, 0.0, omega);
        } else if constexpr (std::is_same_v<T, DeltaDeltaPrime>) {
          check_mu(m.mu);
          if (!std::isfinite(m.lambda))
            throw std::invalid_argument("mirror coupling lambda must be finite");
          return delta_prime_amplitudes(m.mu, m.lambda, omega);
        } else {
          if (!m.theta_plus || !m.theta_minus)
            throw std::invalid_argument("PerfectPhases: phase functions must be set");
          const Complex rp = std::polar(1.0, m.theta_plus(omega));
          const Complex rm = std::polar(1.0, m.theta_minus(omega));
          return {omega, Complex(0.0), Complex(0.0), rp, rm};
        }
      },
      model);
}

Mat2 s_matrix(const ScatteringAmplitudes& sa) {
  return {sa.s_plus, sa.r_plus, sa.r_minus, sa.s_minus};
}

Mat2 s_matrix(const MirrorModel& model, double omega) {
  return s_matrix(amplitudes(model, omega));
}

double unitarity_residual(const ScatteringAmplitudes& sa) {
  const Mat2 s = s_matrix(sa);
  return (s * s.adjoint() - Mat2::identity()).max_abs();
}

double reality_residual(const MirrorModel& model, double omega) {
  check_omega(omega);
  return (s_matrix(model, -omega) - s_matrix(model, omega).conjugate()).max_abs();
}

double high_frequency_transmission(const MirrorModel& model) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PureDelta>) {
          check_mu(m.mu);
          return 1.0;
        } else if constexpr (std::is_same_v<T, DeltaDeltaPrime>) {
          check_mu(m.mu);
          return (1.0 - m.lambda * m.lambda) / (1.0 + m.lambda * m.lambda);
        } else {
          throw std::invalid_argument(
              "high_frequency_transmission: not applicable to PerfectPhases mirrors");
        }
      },
      model);
}

}  // namespace dce
