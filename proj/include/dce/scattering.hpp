#pragma once

#include <functional>
#include <variant>

#include "dce/mat2.hpp"

namespace dce {

// Point mirror at x = 0 modeled by a Dirac-delta potential of strength mu
// (frequency units, natural units hbar = c = 1). Transparent at high
// frequency, Dirichlet on both sides as mu -> infinity.
struct PureDelta {
  double mu = 1.0;
};

// delta-delta' mirror: delta strength mu plus a dimensionless delta'
// strength lambda. The two sides scatter differently; lambda -> -lambda
// swaps the mirror's left and right properties.
struct DeltaDeltaPrime {
  double mu = 1.0;
  double lambda = 0.0;
};

// Idealized perfectly reflecting mirror, |r±| = 1, with prescribed
// frequency-dependent reflection phases for each side. Phases should return
// values in (-pi, pi] and be odd in omega when negative frequencies matter.
struct PerfectPhases {
  std::function<double(double)> theta_plus;
  std::function<double(double)> theta_minus;
};

using MirrorModel = std::variant<PureDelta, DeltaDeltaPrime, PerfectPhases>;

// Transmission (s) and reflection (r) coefficients at one frequency.
// "+" / "-" label scattering to the right / left of the mirror.
struct ScatteringAmplitudes {
  double omega = 0.0;
  Complex s_plus{};
  Complex s_minus{};
  Complex r_plus{};
  Complex r_minus{};
};

// Reflection phase of the Robin boundary condition phi - (2/mu) phi' = 0:
// 2 atan(2 omega / mu), in [0, pi) for omega >= 0 and odd in omega.
double robin_phase(double mu, double omega);

// Phase presets for PerfectPhases mirrors.
std::function<double(double)> phase_dirichlet();         // pi
std::function<double(double)> phase_neumann();           // 0
std::function<double(double)> phase_robin(double mu);    // robin_phase

MirrorModel dirichlet_mirror();
MirrorModel neumann_mirror();

// Scattering coefficients of the model at a (real, possibly negative)
// frequency. For mu = 0 the delta-delta' coefficients are frequency
// independent, s = (1-lambda^2)/(1+lambda^2), r± = ±2 lambda/(1+lambda^2);
// that closed form is used for every omega including 0, where the generic
// expression would be 0/0.
ScatteringAmplitudes amplitudes(const MirrorModel& model, double omega);

// S-matrix [[s+, r+], [r-, s-]]: maps (left-incoming, right-incoming)
// amplitudes to (right-outgoing, left-outgoing).
Mat2 s_matrix(const ScatteringAmplitudes& sa);
Mat2 s_matrix(const MirrorModel& model, double omega);

// max-norm of S S† - 1; zero for any lossless mirror.
double unitarity_residual(const ScatteringAmplitudes& sa);

// max-norm of S(-omega) - S(omega)*; zero when the time-domain scattering
// kernel is real.
double reality_residual(const MirrorModel& model, double omega);

// Signed limit of s±(omega) as omega -> infinity: 1 for a pure delta,
// (1-lambda^2)/(1+lambda^2) for delta-delta'. Not defined for PerfectPhases.
double high_frequency_transmission(const MirrorModel& model);

}  // namespace dce
