#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dce/spectrum.hpp"

namespace dce {

// Total creation rates per tau (units eps^2 omega0^3). normalized is the
// ratio to the Dirichlet rate eps^2 omega0^3 / (6 pi), the maximum over all
// lossless mirrors; it lies in [0, 1].
struct RateSummary {
  double rate_plus_per_tau = 0.0;
  double rate_minus_per_tau = 0.0;
  double rate_total_per_tau = 0.0;
  double normalized = 0.0;
};

struct ScanCell {
  RateSummary summary{};
  std::string error;  // empty on success
  bool ok() const { return error.empty(); }
};

// Rectangular scan over the (mu/omega0, lambda) plane, cells stored row-major
// with lambda as the slow index: cells[i_lambda * n_mu + i_mu].
struct ScanGrid {
  std::vector<double> mu_over_omega0;
  std::vector<double> lambda;
  std::vector<ScanCell> cells;

  const ScanCell& at(std::size_t i_lambda, std::size_t i_mu) const {
    return cells[i_lambda * mu_over_omega0.size() + i_mu];
  }
};

// Raised by ratio_valley when the sampled ratio curve has no interior
// strict minimum; the message lists every sampled (mu/omega0, ratio) pair.
class NotUnimodalError : public std::runtime_error {
 public:
  explicit NotUnimodalError(const std::string& what) : std::runtime_error(what) {}
};

// Dirichlet total rate N_D/tau = eps^2 omega0^3 / (6 pi).
double dirichlet_rate(const MotionProfile& p);

// Total rate for the delta-delta' mirror from the closed form
//
//   N/tau = N_D/tau * [A + B ln(a^2 b^2 + 1) + C atan(a b)]
//                   / [a^3 b^5 (a^2 b^2 + 4)],
//   a = omega0/mu, b = 1 + lambda^2,
//   A = 4 a^5 l^2 b^5 - 24 a (l^2-1)^2 b - 6 a^3 b^5 + 40 a^3 l^2 b^3,
//   B = 3 a^3 [(l^2-1)^2 - 4 l^2] b^3 + 12 a [(l^2-1)^2 - 2 l^2] b,
//   C = 6 a^2 b^4 + 24 (l^2-1)^2.
//
// The numerator cancels to O(a^3) as a -> 0, so below a = 1e-3 the closed
// form has lost too many digits and the quadrature total takes over; the two
// paths agree at the seam within 1e-6. There is no closed per-side form: the
// split fraction comes from quadrature of N± and is scaled to the total, so
// rate_plus + rate_minus == rate_total holds exactly. Requires mu > 0
// (mu = 0 is served by total_rate_quadrature).
RateSummary total_rate_closed(double mu, double lambda, const MotionProfile& p,
                              const QuadratureConfig& quad = {});

// Total rate by adaptive integration of the monochromatic spectrum over
// [0, omega0], per side. Works for every mirror model including mu = 0 and
// PerfectPhases; the oracle for total_rate_closed.
RateSummary total_rate_quadrature(const MirrorModel& model, const MotionProfile& p,
                                  const QuadratureConfig& quad = {});

// N+/N- for the delta-delta' mirror (mu >= 0). Throws std::domain_error when
// N- falls below 1e-300.
double sides_ratio(double mu, double lambda, const MotionProfile& p,
                   const QuadratureConfig& quad = {});

// RateSummary at every (mu/omega0, lambda) grid point via total_rate_closed.
// Cells that fail numerically carry the error message in-cell instead of
// aborting the scan. Cells are distributed over `workers` threads (0 = use
// the DCE_WORKERS environment variable, falling back to the hardware count);
// results are identical for any worker count.
ScanGrid scan_plane(const std::vector<double>& mu_over_omega0,
                    const std::vector<double>& lambda, const MotionProfile& p,
                    const QuadratureConfig& quad = {}, int workers = 0);

// Location (in mu/omega0) of the minimum of sides_ratio over
// [mu_lo, mu_hi], found by golden-section search to 1e-4 after a unimodality
// check on a log-spaced sample of the bracket.
double ratio_valley(double lambda, double mu_lo, double mu_hi,
                    const MotionProfile& p, const QuadratureConfig& quad = {});

}  // namespace dce
