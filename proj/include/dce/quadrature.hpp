#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace dce {

// Tolerances shared by every adaptive integration in the library.
struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
};

// Raised when the subdivision budget runs out before the requested tolerance
// is met. Carries the best estimate and its error bound so callers can
// inspect how far the integration got.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate_, double error_bound_,
                  int subdivisions_)
      : std::runtime_error(what),
        estimate(estimate_),
        error_bound(error_bound_),
        subdivisions(subdivisions_) {}

  double estimate;
  double error_bound;
  int subdivisions;
};

// Integral of f over [a, b] by globally adaptive Gauss-Kronrod (G7, K15):
// the interval with the largest error estimate is bisected until the summed
// error drops below max(abs_tol, rel_tol * |result|).
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

}  // namespace dce
