#pragma once

#include <utility>

#include "dce/scattering.hpp"

namespace dce {

enum class Incidence { left, right };

// Stationary scattering mode of the delta-delta' mirror built from
// unit-amplitude plane waves (the 1/sqrt(4 pi omega) normalization cancels in
// every matching condition and is dropped):
//   left incidence:  e^{i w x} + r- e^{-i w x} on x<0,  s+ e^{i w x} on x>0
//   right incidence: e^{-i w x} + r+ e^{i w x} on x>0,  s- e^{-i w x} on x<0.
struct ModeSolution {
  Incidence incidence = Incidence::left;
  double omega = 0.0;
  Complex reflected{};
  Complex transmitted{};
};

// Field and derivative at both faces of the mirror, phi(0∓) and phi'(0∓).
struct MatchingData {
  Complex phi_left{};
  Complex phi_right{};
  Complex dphi_left{};
  Complex dphi_right{};
};

// Boundary values of the plane-wave mode at x = 0∓.
MatchingData boundary_data(const ModeSolution& mode);

// Mode assembled from closed-form scattering coefficients (regular at
// lambda = ±1, unlike the transfer-form matching conditions).
ModeSolution mode_from_amplitudes(const ScatteringAmplitudes& sa, Incidence inc);

// | |reflected|^2 + |transmitted|^2 - 1 |, the flux-conservation defect.
double flux_residual(const ModeSolution& mode);

// Absolute residuals of the delta-delta' matching conditions
//   phi(0+)  = [(1+l)/(1-l)] phi(0-)
//   phi'(0+) = [(1-l)/(1+l)] phi'(0-) + [2 mu/(1-l^2)] phi(0-).
// The transfer form divides by 1∓lambda, so |1-lambda^2| must exceed 1e-12;
// at lambda = ±1 use robin_dirichlet_residual instead.
std::pair<double, double> matching_residual(double mu, double lambda,
                                            const MatchingData& m);

// Solves the 2x2 complex linear system posed by the matching conditions for
// one incidence direction.
ModeSolution solve_mode(double mu, double lambda, double omega, Incidence inc);

// Both incidences solved and packed as scattering coefficients; agrees with
// scattering::amplitudes to 1e-12 away from lambda = ±1.
ScatteringAmplitudes solve_scattering(double mu, double lambda, double omega);

// U(lambda) = [[2l+i, 1-l^2], [1-l^2, -2l+i]] / (1+l^2-i), the unitary
// reformulation of the matching conditions: Phi+ = U(lambda) Phi- with
//   Phi± = (mu phi(0+) ± i phi'(0+), mu phi(0-) ∓ i phi'(0-)).
Mat2 u_matrix(double lambda);

// Euclidean norm of Phi+ - U(lambda) Phi- for the given boundary data.
double u_matrix_residual(double mu, double lambda, const MatchingData& m);
double u_matrix_residual(double mu, double lambda, double omega,
                         const ModeSolution& mode);

// Residuals of the lambda = 1 boundary conditions: the Robin condition
// |phi(0+) - (2/mu) phi'(0+)| on the right face and the Dirichlet condition
// |phi(0-)| on the left face. Requires mu > 0.
std::pair<double, double> robin_dirichlet_residual(double mu, double omega,
                                                   const ModeSolution& mode);

// |phi'(0+)|: the mu -> 0 limit of the Robin condition (Neumann).
double neumann_residual(const ModeSolution& mode);

}  // namespace dce
