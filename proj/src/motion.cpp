#include "dce/motion.hpp"

#include <cmath>
#include <stdexcept>

namespace dce {

void validate_profile(const MotionProfile& p) {
  if (!(std::isfinite(p.eps) && p.eps > 0.0))
    throw std::invalid_argument("MotionProfile: eps must be positive and finite");
  if (!(std::isfinite(p.omega0) && p.omega0 > 0.0))
    throw std::invalid_argument("MotionProfile: omega0 must be positive and finite");
  if (!(std::isfinite(p.tau) && p.tau > 0.0))
    throw std::invalid_argument("MotionProfile: tau must be positive and finite");
}

std::vector<std::string> profile_warnings(const MotionProfile& p) {
  std::vector<std::string> warnings;
  if (p.eps * p.omega0 >= 0.1)
    warnings.push_back("eps*omega0 = " + std::to_string(p.eps * p.omega0) +
                       " >= 0.1: mirror velocity is not safely nonrelativistic");
  if (p.omega0 * p.tau < 10.0)
    warnings.push_back("omega0*tau = " + std::to_string(p.omega0 * p.tau) +
                       " < 10: outside the monochromatic-limit regime");
  return warnings;
}

double displacement(const MotionProfile& p, double t) {
  if (!std::isfinite(t)) throw std::domain_error("displacement: non-finite time");
  return p.eps * std::cos(p.omega0 * t) * std::exp(-std::abs(t) / p.tau);
}

double fourier_g(const MotionProfile& p, double omega) {
  if (!std::isfinite(omega)) throw std::domain_error("fourier_g: non-finite frequency");
  const double t2 = p.tau * p.tau;
  const double num = 2.0 * p.tau * (1.0 + t2 * (omega * omega + p.omega0 * p.omega0));
  const double dm = 1.0 + (omega - p.omega0) * (omega - p.omega0) * t2;
  const double dp = 1.0 + (omega + p.omega0) * (omega + p.omega0) * t2;
  return num / (dm * dp);
}

double fourier_g_numeric(const MotionProfile& p, double omega,
                         const QuadratureConfig& quad) {
  if (!std::isfinite(omega))
    throw std::domain_error("fourier_g_numeric: non-finite frequency");
  // exp(-T/tau) < 1e-12 beyond the truncation point; g is even, so the
  // imaginary part of the transform vanishes and only cos(w t) remains.
  const double T = p.tau * std::log(1e12);
  auto f = [&](double t) {
    return std::cos(p.omega0 * t) * std::exp(-std::abs(t) / p.tau) *
           std::cos(omega * t);
  };
  return integrate(f, -T, 0.0, quad) + integrate(f, 0.0, T, quad);
}

double peak_weight(const MotionProfile& p, double window,
                   const QuadratureConfig& quad) {
  if (!(window > 0.0 && window < p.omega0))
    throw std::invalid_argument("peak_weight: window must lie in (0, omega0)");
  auto f = [&](double w) {
    const double g = fourier_g(p, w);
    return g * g / p.tau;
  };
  // Split at the peak so the adaptive rule sees it as an endpoint.
  return integrate(f, p.omega0 - window, p.omega0, quad) +
         integrate(f, p.omega0, p.omega0 + window, quad);
}

}  // namespace dce
