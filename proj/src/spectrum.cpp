#include "dce/spectrum.hpp"

#include <cmath>
#include <iostream>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace dce {

namespace {

constexpr double kPi = std::numbers::pi;

void warn_regime_once(const MotionProfile& p) {
  if (p.omega0 * p.tau >= 10.0) return;
  static std::once_flag flag;
  std::call_once(flag, [&] {
    std::cerr << "warning: omega0*tau = " << p.omega0 * p.tau
              << " < 10, outside the monochromatic-limit regime; "
                 "values are still computed\n";
  });
}

SplitLambda sides_from(const ScatteringAmplitudes& a, const ScatteringAmplitudes& b) {
  const Complex plus = a.r_plus * b.r_plus - a.s_plus * b.s_plus;
  const Complex minus = a.r_minus * b.r_minus - a.s_minus * b.s_minus;
  return {0.25 * (1.0 + plus.real()), 0.25 * (1.0 + minus.real())};
}

SpectrumSample mono_sample(const MirrorModel& model, const MotionProfile& p,
                           double omega) {
  SpectrumSample out;
  out.omega = omega;
  if (omega < 0.0 || omega >= p.omega0) return out;  // no pairs above omega0
  const double idler = p.omega0 - omega;
  const SplitLambda L = sides_from(amplitudes(model, omega), amplitudes(model, idler));
  const double pref = (p.eps * p.eps / kPi) * omega * idler;
  out.n_plus_per_tau = pref * L.plus;
  out.n_minus_per_tau = pref * L.minus;
  out.n_total_per_tau = out.n_plus_per_tau + out.n_minus_per_tau;
  return out;
}

// Int_0^inf f(W) dW for integrands carrying the |G(w+W)|^2 line shape:
// anchored at the peak W = omega0 - w when it lies inside the domain, tail
// mapped by W = base + omega0 u/(1-u), and masked to zero once |G|^2 falls
// below 1e-16 of its in-domain maximum.
double integrate_idler(const MirrorModel&, const MotionProfile& p, double omega,
                       const std::function<double(double)>& f,
                       const QuadratureConfig& quad) {
  const double peak = p.omega0 - omega;
  const double base = std::max(peak, 0.0);
  const double gmax = fourier_g(p, omega + base);
  const double cutoff = 1e-16 * gmax * gmax;

  auto masked = [&](double W) {
    const double g = fourier_g(p, omega + W);
    return g * g < cutoff ? 0.0 : f(W);
  };

  double total = 0.0;
  if (peak > 0.0) total += integrate(masked, 0.0, peak, quad);
  const double scale = p.omega0;
  auto tail = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double om = 1.0 - u;
    return masked(base + scale * u / om) * scale / (om * om);
  };
  total += integrate(tail, 0.0, 1.0, quad);
  return total;
}

}  // namespace

double lambda_total(const ScatteringAmplitudes& a, const ScatteringAmplitudes& b) {
  const SplitLambda L = sides_from(a, b);
  return L.plus + L.minus;
}

SplitLambda lambda_sides(const ScatteringAmplitudes& a, const ScatteringAmplitudes& b) {
  return sides_from(a, b);
}

SplitLambda lambda_sides_closed(double xi, double alpha, double lambda) {
  if (!(xi > 0.0 && xi < 1.0))
    throw std::invalid_argument("lambda_sides_closed: xi must lie in (0, 1)");
  if (!(std::isfinite(alpha) && alpha > 0.0))
    throw std::invalid_argument(
        "lambda_sides_closed: alpha must be finite and positive (mu = 0 is "
        "covered by lambda_sides)");
  const double l2 = lambda * lambda;
  const double beta = 1.0 + l2;
  const double core = xi * (1.0 - xi) * alpha * alpha;
  const Complex den(core * beta * beta - 1.0, alpha * beta);
  auto side = [&](double sign) {
    const double d = lambda - sign;
    const Complex num(2.0 * core * l2 - 0.5, alpha * d * d / 4.0);
    return (num / den).real();
  };
  return {side(+1.0), side(-1.0)};
}

double lambda_perfect(double theta_plus_w, double theta_plus_W,
                      double theta_minus_w, double theta_minus_W) {
  return 0.25 * (2.0 + std::cos(theta_plus_w + theta_plus_W) +
                 std::cos(theta_minus_w + theta_minus_W));
}

SpectrumSample spectrum_mono(const MirrorModel& model, const MotionProfile& p,
                             double omega) {
  validate_profile(p);
  if (!(omega >= 0.0))
    throw std::domain_error("spectrum_mono: omega must be >= 0");
  warn_regime_once(p);
  return mono_sample(model, p, omega);
}

SpectrumSample spectrum_finite_tau(const MirrorModel& model, const MotionProfile& p,
                                   double omega, const QuadratureConfig& quad) {
  validate_profile(p);
  if (!(omega > 0.0))
    throw std::domain_error("spectrum_finite_tau: omega must be > 0");

  const double pref = 2.0 * p.eps * p.eps / (kPi * kPi * p.tau);
  auto run = [&](bool plus) {
    auto f = [&](double W) {
      const SplitLambda L =
          sides_from(amplitudes(model, omega), amplitudes(model, W));
      const double g = fourier_g(p, omega + W);
      return omega * W * g * g * (plus ? L.plus : L.minus);
    };
    return pref * integrate_idler(model, p, omega, f, quad);
  };

  SpectrumSample out;
  out.omega = omega;
  out.n_plus_per_tau = run(true);
  out.n_minus_per_tau = run(false);
  out.n_total_per_tau = out.n_plus_per_tau + out.n_minus_per_tau;
  return out;
}

Mat2 first_order_smatrix(const MirrorModel& model, const MotionProfile& p,
                         double omega, double Omega) {
  if (!std::isfinite(omega) || !std::isfinite(Omega))
    throw std::domain_error("first_order_smatrix: non-finite frequency");
  const Mat2 sw = s_matrix(model, omega);
  const Mat2 sW = s_matrix(model, Omega);
  // S(w) eta - eta S(W) with eta = diag(1, -1).
  const Mat2 m{sw.a - sW.a, -sw.b - sW.b, sw.c + sW.c, -sw.d + sW.d};
  const Complex factor = Complex(0.0, 1.0) * p.eps * Omega * fourier_g(p, omega - Omega);
  return factor * m;
}

double spectrum_trace_oracle(const MirrorModel& model, const MotionProfile& p,
                             double omega, const QuadratureConfig& quad) {
  validate_profile(p);
  if (!(omega > 0.0))
    throw std::domain_error("spectrum_trace_oracle: omega must be > 0");

  auto f = [&](double W) {
    if (W == 0.0) return 0.0;  // integrable w/W endpoint, kernel vanishes
    const Mat2 s1 = first_order_smatrix(model, p, omega, -W);
    return (omega / W) * (s1 * s1.adjoint()).trace().real();
  };
  const double value = integrate_idler(model, p, omega, f, quad);
  return value / (4.0 * kPi * kPi * p.tau);
}

}  // namespace dce
