#pragma once

#include <string>
#include <vector>

#include "dce/quadrature.hpp"

namespace dce {

// Prescribed mirror trajectory q(t) = eps cos(omega0 t) exp(-|t|/tau):
// oscillation amplitude eps (length), carrier frequency omega0, effective
// oscillation time tau. The monochromatic-limit results assume omega0 tau >> 1
// and the scattering treatment assumes a nonrelativistic mirror,
// eps * omega0 << 1.
struct MotionProfile {
  double eps = 0.01;
  double omega0 = 1.0;
  double tau = 1000.0;
};

// Throws std::invalid_argument unless eps, omega0, tau are all positive and
// finite.
void validate_profile(const MotionProfile& p);

// Human-readable regime warnings (nonrelativistic bound eps*omega0 < 0.1,
// monochromatic bound omega0*tau >= 10); empty when the profile is
// comfortably inside both regimes.
std::vector<std::string> profile_warnings(const MotionProfile& p);

// q(t) = eps cos(omega0 t) exp(-|t|/tau); |q| <= eps.
double displacement(const MotionProfile& p, double t);

// Fourier transform of the unit-amplitude motion g(t) = cos(omega0 t)
// exp(-|t|/tau) with the convention G(w) = Int g(t) e^{i w t} dt:
//
//   G(w) = 2 tau [1 + tau^2 (w^2 + omega0^2)]
//          / ([1 + (w-omega0)^2 tau^2][1 + (w+omega0)^2 tau^2]).
//
// Real, even and strictly positive, with sharp peaks of height ~tau at
// ±omega0; |G|^2/tau tends to (pi/2)[delta(w-omega0)+delta(w+omega0)].
double fourier_g(const MotionProfile& p, double omega);

// The same transform by direct time-domain quadrature, truncated at
// T = tau ln(1e12) and split at t = 0 where |t| kinks. Independent oracle
// for fourier_g; agrees within 1e-8 relative.
double fourier_g_numeric(const MotionProfile& p, double omega,
                         const QuadratureConfig& quad = {});

// Int_{omega0-window}^{omega0+window} |G|^2 / tau dw, one peak's weight;
// converges to pi/2 as omega0 tau -> infinity. Requires 0 < window < omega0.
double peak_weight(const MotionProfile& p, double window,
                   const QuadratureConfig& quad = {});

}  // namespace dce
