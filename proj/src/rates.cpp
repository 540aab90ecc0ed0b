#include "dce/rates.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <thread>

namespace dce {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClosedFormAlphaFloor = 1e-3;

double closed_normalized(double alpha, double lambda) {
  const double l2 = lambda * lambda;
  const double b = 1.0 + l2;
  const double K = (l2 - 1.0) * (l2 - 1.0);
  const double b3 = b * b * b;
  const double b4 = b3 * b;
  const double b5 = b4 * b;
  const double a2 = alpha * alpha;
  const double a3 = a2 * alpha;
  const double a5 = a3 * a2;

  const double A = 4.0 * a5 * l2 * b5 - 24.0 * alpha * K * b - 6.0 * a3 * b5 +
                   40.0 * a3 * l2 * b3;
  const double B = 3.0 * a3 * (K - 4.0 * l2) * b3 + 12.0 * alpha * (K - 2.0 * l2) * b;
  const double C = 6.0 * a2 * b4 + 24.0 * K;

  const double num = A + B * std::log1p(a2 * b * b) + C * std::atan(alpha * b);
  const double den = a3 * b5 * (a2 * b * b + 4.0);
  return num / den;
}

// Per-side integrals of the monochromatic spectrum over [0, omega0].
struct SideRates {
  double plus;
  double minus;
};

SideRates side_rates(const MirrorModel& model, const MotionProfile& p,
                     const QuadratureConfig& quad) {
  const double w0 = p.omega0;
  auto run = [&](bool plus) {
    auto f = [&](double w) {
      const SplitLambda L =
          lambda_sides(amplitudes(model, w), amplitudes(model, w0 - w));
      return w * (w0 - w) * (plus ? L.plus : L.minus);
    };
    return (p.eps * p.eps / kPi) * integrate(f, 0.0, w0, quad);
  };
  return {run(true), run(false)};
}

int resolve_workers(int requested, std::size_t jobs) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("DCE_WORKERS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

double dirichlet_rate(const MotionProfile& p) {
  validate_profile(p);
  return p.eps * p.eps * p.omega0 * p.omega0 * p.omega0 / (6.0 * kPi);
}

RateSummary total_rate_closed(double mu, double lambda, const MotionProfile& p,
                              const QuadratureConfig& quad) {
  validate_profile(p);
  if (!(mu > 0.0))
    throw std::invalid_argument(
        "total_rate_closed: mu must be > 0 (mu = 0 is served by "
        "total_rate_quadrature)");
  if (!std::isfinite(lambda))
    throw std::invalid_argument("total_rate_closed: lambda must be finite");

  const double alpha = p.omega0 / mu;
  const MirrorModel model = DeltaDeltaPrime{mu, lambda};
  const SideRates q = side_rates(model, p, quad);
  const double qtotal = q.plus + q.minus;

  RateSummary out;
  if (alpha >= kClosedFormAlphaFloor) {
    out.normalized = closed_normalized(alpha, lambda);
    out.rate_total_per_tau = out.normalized * dirichlet_rate(p);
  } else {
    out.rate_total_per_tau = qtotal;
    out.normalized = qtotal / dirichlet_rate(p);
  }
  // Both sides from their own quadrature fractions so that lambda -> -lambda
  // swaps them exactly; the sum differs from the total by at most one ulp.
  const double fplus = qtotal > 0.0 ? q.plus / qtotal : 0.5;
  const double fminus = qtotal > 0.0 ? q.minus / qtotal : 0.5;
  out.rate_plus_per_tau = fplus * out.rate_total_per_tau;
  out.rate_minus_per_tau = fminus * out.rate_total_per_tau;
  return out;
}

RateSummary total_rate_quadrature(const MirrorModel& model, const MotionProfile& p,
                                  const QuadratureConfig& quad) {
  validate_profile(p);
  const SideRates q = side_rates(model, p, quad);
  RateSummary out;
  out.rate_plus_per_tau = q.plus;
  out.rate_minus_per_tau = q.minus;
  out.rate_total_per_tau = q.plus + q.minus;
  out.normalized = out.rate_total_per_tau / dirichlet_rate(p);
  return out;
}

double sides_ratio(double mu, double lambda, const MotionProfile& p,
                   const QuadratureConfig& quad) {
  if (std::isnan(mu) || mu < 0.0)
    throw std::invalid_argument("sides_ratio: mu must be >= 0");
  const RateSummary r =
      total_rate_quadrature(DeltaDeltaPrime{mu, lambda}, p, quad);
  if (r.rate_minus_per_tau < 1e-300)
    throw std::domain_error("sides_ratio: N- is degenerate (below 1e-300)");
  return r.rate_plus_per_tau / r.rate_minus_per_tau;
}

ScanGrid scan_plane(const std::vector<double>& mu_over_omega0,
                    const std::vector<double>& lambda, const MotionProfile& p,
                    const QuadratureConfig& quad, int workers) {
  validate_profile(p);
  if (mu_over_omega0.empty() || lambda.empty())
    throw std::invalid_argument("scan_plane: grids must be non-empty");
  for (double m : mu_over_omega0)
    if (!(m > 0.0))
      throw std::invalid_argument("scan_plane: mu/omega0 values must be > 0");

  ScanGrid grid;
  grid.mu_over_omega0 = mu_over_omega0;
  grid.lambda = lambda;
  grid.cells.resize(mu_over_omega0.size() * lambda.size());

  const std::size_t n_mu = mu_over_omega0.size();
  const std::size_t total = grid.cells.size();
  std::atomic<std::size_t> next{0};

  auto run_cells = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < total;) {
      const double mu = mu_over_omega0[i % n_mu] * p.omega0;
      const double lam = lambda[i / n_mu];
      ScanCell& cell = grid.cells[i];
      try {
        cell.summary = total_rate_closed(mu, lam, p, quad);
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }
  };

  const int n_workers = resolve_workers(workers, total);
  if (n_workers <= 1) {
    run_cells();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(run_cells);
    for (auto& t : pool) t.join();
  }
  return grid;
}

double ratio_valley(double lambda, double mu_lo, double mu_hi,
                    const MotionProfile& p, const QuadratureConfig& quad) {
  if (!(mu_lo > 0.0 && mu_hi > mu_lo))
    throw std::invalid_argument("ratio_valley: need 0 < mu_lo < mu_hi");

  auto ratio = [&](double mu_over_w0) {
    return sides_ratio(mu_over_w0 * p.omega0, lambda, p, quad);
  };

  // Unimodality check on a log-spaced sample of the bracket.
  constexpr int kSamples = 17;
  std::vector<double> xs(kSamples), ys(kSamples);
  const double llo = std::log(mu_lo), lhi = std::log(mu_hi);
  for (int i = 0; i < kSamples; ++i) {
    xs[i] = std::exp(llo + (lhi - llo) * i / (kSamples - 1));
    ys[i] = ratio(xs[i]);
  }
  int k = 0;
  for (int i = 1; i < kSamples; ++i)
    if (ys[i] < ys[k]) k = i;
  bool unimodal = k > 0 && k < kSamples - 1;
  for (int i = 1; i <= k && unimodal; ++i) unimodal = ys[i] < ys[i - 1];
  for (int i = k + 1; i < kSamples && unimodal; ++i) unimodal = ys[i] > ys[i - 1];
  if (!unimodal) {
    std::ostringstream msg;
    msg << "ratio_valley: sampled ratio is not unimodal on [" << mu_lo << ", "
        << mu_hi << "]; samples (mu/omega0, ratio):";
    for (int i = 0; i < kSamples; ++i) msg << " (" << xs[i] << ", " << ys[i] << ")";
    throw NotUnimodalError(msg.str());
  }

  // Golden-section on the bracketing neighbors of the sampled minimum.
  constexpr double kTol = 1e-4;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = xs[k - 1], b = xs[k + 1];
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = ratio(c), fd = ratio(d);
  while (b - a > kTol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = ratio(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = ratio(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace dce
