#pragma once

#include "dce/motion.hpp"
#include "dce/scattering.hpp"

namespace dce {

// Per-frequency density of created particles divided by the effective
// oscillation time tau (units eps^2 * frequency^2). "+"/"-" are the right and
// left sides of the mirror; the total is their sum by construction.
struct SpectrumSample {
  double omega = 0.0;
  double n_plus_per_tau = 0.0;
  double n_minus_per_tau = 0.0;
  double n_total_per_tau = 0.0;
};

struct SplitLambda {
  double plus = 0.0;
  double minus = 0.0;
};

// Mode-coupling factor: Lambda = Lambda+ + Lambda-, with
//   Lambda±(w, W) = (1/4) Re[1 + r±(w) r±(W) - s±(w) s±(W)].
// Unitarity of the S-matrix pins each side to [0, 1/2] (Cauchy-Schwarz on
// the unit rows of S), so the total lies in [0, 1].
double lambda_total(const ScatteringAmplitudes& a, const ScatteringAmplitudes& b);
SplitLambda lambda_sides(const ScatteringAmplitudes& a, const ScatteringAmplitudes& b);

// Closed form of Lambda± for the delta-delta' mirror on the pair-creation
// line w = xi omega0, W = (1-xi) omega0, in the dimensionless variables
// xi = w/omega0 and alpha = omega0/mu:
//
//   Lambda± = Re[ (2 xi alpha^2 (1-xi) l^2 - 1/2 + i alpha (l∓1)^2/4)
//               / (xi alpha^2 (1-xi) (l^2+1)^2 - 1 + i alpha (l^2+1)) ].
//
// Requires finite alpha > 0; the mu = 0 mirror is covered by lambda_sides on
// its frequency-independent amplitudes.
SplitLambda lambda_sides_closed(double xi, double alpha, double lambda);

// Lambda for a perfect mirror with reflection phases theta±:
//   (1/4) Re[2 + e^{i(th+(w)+th+(W))} + e^{i(th-(w)+th-(W))}].
double lambda_perfect(double theta_plus_w, double theta_plus_W,
                      double theta_minus_w, double theta_minus_W);

// Monochromatic-limit spectrum (omega0 tau >> 1):
//   N±(w)/tau = (eps^2/pi) w (omega0 - w) Lambda±(w, omega0 - w)
// for 0 <= w < omega0 and zero beyond: no particles above the carrier
// frequency, and the spectrum is symmetric about omega0/2 (pair creation).
// Outside the regime omega0 tau >= 10 a warning is printed once per process;
// the value is still computed.
SpectrumSample spectrum_mono(const MirrorModel& model, const MotionProfile& p,
                             double omega);

// Finite-tau spectrum
//   N(w) = (4 eps^2/pi) Int_0^inf (dW/2pi) w W |G(w+W)|^2 Lambda(w, W),
// split per side with Lambda±, reported per tau for direct comparison with
// spectrum_mono. The idler integral is anchored at the |G| peak W = omega0-w
// and its tail is compactified; see integrate notes in the implementation.
SpectrumSample spectrum_finite_tau(const MirrorModel& model, const MotionProfile& p,
                                   double omega, const QuadratureConfig& quad = {});

// First-order correction to the S-matrix of a moving mirror:
//   S1(w, W) = i eps W G(w - W) [S(w) eta - eta S(W)],  eta = diag(1, -1).
Mat2 first_order_smatrix(const MirrorModel& model, const MotionProfile& p,
                         double omega, double Omega);

// The same total spectrum through the trace route,
//   N(w) = (1/2pi) Int_0^inf (dW/2pi) (w/W) Tr[S1(w,-W) S1†(w,-W)],
// evaluated from first_order_smatrix with explicit 2x2 algebra and no
// reference to Lambda. Returns N(w)/tau; equality with spectrum_finite_tau
// validates the identity Tr[S1 S1†] = 8 eps^2 W^2 |G(w+W)|^2 Lambda(w, W).
double spectrum_trace_oracle(const MirrorModel& model, const MotionProfile& p,
                             double omega, const QuadratureConfig& quad = {});

}  // namespace dce
