#include "dce/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "dce/modes.hpp"
#include "dce/random.hpp"
#include "dce/rates.hpp"
#include "dce/spectrum.hpp"

namespace dce {

namespace {

constexpr double kPi = std::numbers::pi;

class Suite {
 public:
  explicit Suite(std::string name) { result_.suite = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (!ok) {
      ++result_.failed;
      if (result_.failures.size() < 5) result_.failures.push_back(describe());
    }
  }

  void note(const std::string& text) { result_.notes.push_back(text); }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

SuiteResult scattering_suite(std::uint64_t seed, bool quick) {
  Suite suite("scattering");
  Rng rng(seed);
  const int draws = quick ? 200 : 1000;
  for (int i = 0; i < draws; ++i) {
    const double mu = rng.uniform(0.0, 10.0);
    const double lam = rng.uniform(-3.0, 3.0);
    const double w = rng.uniform(1e-6, 10.0);
    const MirrorModel m = DeltaDeltaPrime{mu, lam};
    const ScatteringAmplitudes sa = amplitudes(m, w);

    const double uni = unitarity_residual(sa);
    suite.check(uni <= 1e-12, [&] {
      return "unitarity residual " + fmt(uni) + " at mu=" + fmt(mu) +
             " lambda=" + fmt(lam) + " omega=" + fmt(w);
    });
    const double real = reality_residual(m, w);
    suite.check(real <= 1e-12, [&] {
      return "reality residual " + fmt(real) + " at mu=" + fmt(mu) +
             " lambda=" + fmt(lam) + " omega=" + fmt(w);
    });

    // lambda -> -lambda swaps r+ and r-, leaves s± untouched.
    const ScatteringAmplitudes sw = amplitudes(MirrorModel(DeltaDeltaPrime{mu, -lam}), w);
    suite.check(sw.r_plus == sa.r_minus && sw.r_minus == sa.r_plus &&
                    sw.s_plus == sa.s_plus,
                [&] {
                  return "side swap mismatch at mu=" + fmt(mu) +
                         " lambda=" + fmt(lam) + " omega=" + fmt(w);
                });
  }

  // Pure delta coincides with the delta-delta' mirror at lambda = 0.
  for (int i = 0; i < (quick ? 20 : 100); ++i) {
    const double mu = rng.uniform(0.0, 10.0);
    const double w = rng.uniform(1e-6, 10.0);
    const ScatteringAmplitudes a = amplitudes(MirrorModel(PureDelta{mu}), w);
    const ScatteringAmplitudes b = amplitudes(MirrorModel(DeltaDeltaPrime{mu, 0.0}), w);
    suite.check(a.s_plus == b.s_plus && a.r_plus == b.r_plus &&
                    a.r_minus == b.r_minus,
                [&] { return "pure-delta mismatch at mu=" + fmt(mu); });
  }

  // Transmission approaches its high-frequency limit monotonically.
  for (int i = 0; i < (quick ? 5 : 25); ++i) {
    const double mu = rng.uniform(0.1, 10.0);
    const double lam = rng.uniform(-3.0, 3.0);
    const MirrorModel m = DeltaDeltaPrime{mu, lam};
    const double s_inf = high_frequency_transmission(m);
    double prev = 1e300;
    bool monotone = true;
    for (double w : {1e2, 1e4, 1e6}) {
      const double gap = std::abs(amplitudes(m, w).s_plus - s_inf);
      if (gap > prev) monotone = false;
      prev = gap;
    }
    suite.check(monotone, [&] {
      return "high-frequency approach not monotone at mu=" + fmt(mu) +
             " lambda=" + fmt(lam);
    });
  }
  return suite.take();
}

SuiteResult motion_suite(std::uint64_t seed, bool quick) {
  Suite suite("motion");
  Rng rng(seed + 1);

  for (int i = 0; i < (quick ? 50 : 200); ++i) {
    const MotionProfile p{0.01, rng.uniform(0.2, 3.0), rng.uniform(5.0, 200.0)};
    const double w = rng.uniform(-8.0, 8.0);
    const double g = fourier_g(p, w);
    suite.check(g > 0.0, [&] { return "G not positive at omega=" + fmt(w); });
    suite.check(fourier_g(p, -w) == g,
                [&] { return "G not even at omega=" + fmt(w); });
  }

  // Closed-form transform against direct time-domain quadrature. Oscillatory
  // panels carry a round-off floor of ~50 eps Int|f|, so keep the absolute
  // target above it.
  QuadratureConfig quad;
  quad.rel_tol = 1e-10;
  quad.abs_tol = 1e-12;
  quad.max_subdivisions = 50000;
  const int pairs = quick ? 10 : 50;
  for (int i = 0; i < pairs; ++i) {
    const MotionProfile p{0.01, 1.0, rng.uniform(10.0, 60.0)};
    const double w = rng.uniform(0.0, 5.0);
    const double closed = fourier_g(p, w);
    const double numeric = fourier_g_numeric(p, w, quad);
    const double rel = std::abs(numeric - closed) / std::abs(closed);
    suite.check(rel <= 1e-8, [&] {
      return "transform mismatch rel=" + fmt(rel) + " at tau=" + fmt(p.tau) +
             " omega=" + fmt(w);
    });
  }

  // One peak's weight int |G|^2/tau converges to pi/2 with tau; the approach
  // is from above (the cross term between the two peaks adds +pi/(2 tau^2)).
  double prev = 1e300;
  bool converging = true;
  for (double tau : {1e2, 1e3, 1e4}) {
    const MotionProfile p{0.01, 1.0, tau};
    const double gap = std::abs(peak_weight(p, 0.5) - kPi / 2.0);
    if (gap >= prev) converging = false;
    prev = gap;
  }
  suite.check(converging,
              [&] { return "peak weight not converging to pi/2, last gap=" + fmt(prev); });
  suite.check(prev <= 1e-3,
              [&] { return "peak weight at tau=1e4 off pi/2 by " + fmt(prev); });
  return suite.take();
}

SuiteResult spectrum_suite(std::uint64_t seed, bool quick) {
  Suite suite("spectrum");
  Rng rng(seed + 2);

  const int draws = quick ? 100 : 500;
  int side_bound_violations = 0;
  for (int i = 0; i < draws; ++i) {
    const double mu = rng.uniform(0.0, 10.0);
    const double lam = rng.uniform(-3.0, 3.0);
    const double w = rng.uniform(1e-3, 10.0);
    const double W = rng.uniform(1e-3, 10.0);
    const MirrorModel m = DeltaDeltaPrime{mu, lam};
    const ScatteringAmplitudes aw = amplitudes(m, w);
    const ScatteringAmplitudes aW = amplitudes(m, W);

    const double L = lambda_total(aw, aW);
    suite.check(L >= -1e-12 && L <= 1.0 + 1e-12,
                [&] { return "Lambda out of [0,1]: " + fmt(L); });
    suite.check(lambda_total(aW, aw) == L,
                [&] { return "Lambda not symmetric at omega=" + fmt(w) + " Omega=" + fmt(W); });

    const SplitLambda s = lambda_sides(aw, aW);
    if (s.plus < -1e-12 || s.plus > 0.5 + 1e-12 || s.minus < -1e-12 ||
        s.minus > 0.5 + 1e-12)
      ++side_bound_violations;

    const SplitLambda swp =
        lambda_sides(amplitudes(MirrorModel(DeltaDeltaPrime{mu, -lam}), w),
                     amplitudes(MirrorModel(DeltaDeltaPrime{mu, -lam}), W));
    suite.check(swp.plus == s.minus && swp.minus == s.plus,
                [&] { return "lambda swap mismatch at lambda=" + fmt(lam); });
  }
  suite.note("per-side bound Lambda± in [0, 1/2]: " +
             std::to_string(side_bound_violations) + " violations observed in " +
             std::to_string(draws) + " draws");

  // Closed form on the pair-creation line against the definition.
  for (int i = 0; i < draws; ++i) {
    const double xi = rng.uniform(1e-3, 1.0 - 1e-3);
    const double alpha = rng.log_uniform(1e-2, 1e2);
    const double lam = rng.uniform(-3.0, 3.0);
    const double w0 = 1.0;
    const double mu = w0 / alpha;
    const MirrorModel m = DeltaDeltaPrime{mu, lam};
    const SplitLambda def =
        lambda_sides(amplitudes(m, xi * w0), amplitudes(m, (1.0 - xi) * w0));
    const SplitLambda closed = lambda_sides_closed(xi, alpha, lam);
    const double err = std::max(std::abs(def.plus - closed.plus),
                                std::abs(def.minus - closed.minus));
    suite.check(err <= 1e-12, [&] {
      return "closed-vs-definition gap " + fmt(err) + " at xi=" + fmt(xi) +
             " alpha=" + fmt(alpha) + " lambda=" + fmt(lam);
    });
  }

  // Pair symmetry of the monochromatic spectrum about omega0/2.
  const MotionProfile p{0.01, 1.0, 1e3};
  for (int i = 0; i < (quick ? 20 : 100); ++i) {
    const double mu = rng.uniform(0.0, 5.0);
    const double lam = rng.uniform(-3.0, 3.0);
    const double w = rng.uniform(1e-3, 0.5);
    const MirrorModel m = DeltaDeltaPrime{mu, lam};
    const SpectrumSample a = spectrum_mono(m, p, w);
    const SpectrumSample b = spectrum_mono(m, p, p.omega0 - w);
    const double gap = std::max(std::abs(a.n_plus_per_tau - b.n_plus_per_tau),
                                std::abs(a.n_minus_per_tau - b.n_minus_per_tau));
    suite.check(gap <= 1e-14, [&] {
      return "pair symmetry gap " + fmt(gap) + " at omega=" + fmt(w);
    });
  }

  // At lambda = 1 the left side is the Dirichlet parabola exactly and the
  // right side matches the Robin closed form.
  for (int i = 0; i < (quick ? 10 : 40); ++i) {
    const double mu = rng.uniform(0.1, 5.0);
    const double w = rng.uniform(1e-3, 1.0 - 1e-3);
    const MirrorModel m = DeltaDeltaPrime{mu, 1.0};
    const SpectrumSample s = spectrum_mono(m, p, w);
    const double parabola = (p.eps * p.eps / kPi) * w * (p.omega0 - w) * 0.5;
    suite.check(std::abs(s.n_minus_per_tau - parabola) <= 1e-16,
                [&] { return "Dirichlet parabola mismatch at omega=" + fmt(w); });

    const double alpha = p.omega0 / mu;
    const double xi = w / p.omega0;
    const double t = 1.0 - 4.0 * alpha * alpha * (1.0 - xi) * xi;
    const double robin = 0.5 * t * t /
                         ((1.0 + 4.0 * alpha * alpha * xi * xi) *
                          (1.0 + 4.0 * alpha * alpha * (1.0 - xi) * (1.0 - xi)));
    const double nplus = (p.eps * p.eps / kPi) * w * (p.omega0 - w) * robin;
    suite.check(std::abs(s.n_plus_per_tau - nplus) <=
                    1e-14 * std::max(1.0, std::abs(nplus)),
                [&] { return "Robin spectrum mismatch at omega=" + fmt(w); });
  }

  // Trace route against the Lambda route for the finite-tau spectrum.
  const int trace_pairs = quick ? 2 : 5;
  for (int i = 0; i < trace_pairs; ++i) {
    const double mu = rng.uniform(0.2, 5.0);
    const double lam = rng.uniform(-2.0, 2.0);
    const double w = rng.uniform(0.05, 0.95);
    const MotionProfile pf{0.01, 1.0, 1e3};
    const MirrorModel m = DeltaDeltaPrime{mu, lam};
    const double via_lambda = spectrum_finite_tau(m, pf, w).n_total_per_tau;
    const double via_trace = spectrum_trace_oracle(m, pf, w);
    const double rel = std::abs(via_trace - via_lambda) / std::abs(via_lambda);
    suite.check(rel <= 1e-8, [&] {
      return "trace-formula gap rel=" + fmt(rel) + " at mu=" + fmt(mu) +
             " lambda=" + fmt(lam) + " omega=" + fmt(w);
    });
  }
  return suite.take();
}

SuiteResult rates_suite(std::uint64_t seed, bool quick) {
  Suite suite("rates");
  Rng rng(seed + 3);
  const MotionProfile p{0.01, 1.0, 1e3};

  // Closed form vs quadrature across the scan plane.
  const int n = quick ? 7 : 21;
  for (int i = 0; i < n; ++i) {
    const double mu = std::exp(std::log(0.1) +
                               (std::log(10.0) - std::log(0.1)) * i / (n - 1));
    for (int j = 0; j < n; ++j) {
      const double lam = -3.0 + 6.0 * j / (n - 1);
      const RateSummary closed = total_rate_closed(mu, lam, p);
      const RateSummary quad =
          total_rate_quadrature(MirrorModel(DeltaDeltaPrime{mu, lam}), p);
      const double rel = std::abs(closed.normalized - quad.normalized) /
                         std::abs(quad.normalized);
      suite.check(rel <= 1e-6, [&] {
        return "closed-vs-quadrature rel=" + fmt(rel) + " at mu/omega0=" + fmt(mu) +
               " lambda=" + fmt(lam);
      });
      suite.check(closed.normalized <= 1.0 + 1e-9, [&] {
        return "normalized above 1 at mu/omega0=" + fmt(mu) + " lambda=" + fmt(lam);
      });
    }
  }

  // lambda -> -lambda: total invariant, sides swapped.
  for (int i = 0; i < (quick ? 5 : 20); ++i) {
    const double mu = rng.log_uniform(0.1, 10.0);
    const double lam = rng.uniform(0.1, 3.0);
    const RateSummary a = total_rate_closed(mu, lam, p);
    const RateSummary b = total_rate_closed(mu, -lam, p);
    suite.check(a.rate_total_per_tau == b.rate_total_per_tau &&
                    a.rate_plus_per_tau == b.rate_minus_per_tau,
                [&] { return "lambda swap mismatch at mu=" + fmt(mu) + " lambda=" + fmt(lam); });
  }

  // Perfect delta-delta' mirror: rate not monotonic in mu (interior minimum).
  {
    double prev = 0.0;
    bool decreased = false, increased_after = false;
    for (int i = 0; i <= 20; ++i) {
      const double mu = std::exp(std::log(0.1) + (std::log(10.0) - std::log(0.1)) * i / 20.0);
      const double v = total_rate_closed(mu, 1.0, p).normalized;
      if (i > 0) {
        if (v < prev) decreased = true;
        if (decreased && v > prev) increased_after = true;
      }
      prev = v;
    }
    suite.check(decreased && increased_after,
                [] { return std::string("no interior minimum of normalized(mu) at lambda=1"); });
  }

  // Strong delta' coupling kills the production.
  suite.check(total_rate_closed(1.0, 1e3, p).normalized < 0.01,
              [] { return std::string("normalized not < 0.01 at lambda=1e3"); });
  return suite.take();
}

SuiteResult modes_suite(std::uint64_t seed, bool quick) {
  Suite suite("modes");
  Rng rng(seed + 4);

  const int draws = quick ? 100 : 500;
  for (int i = 0; i < draws; ++i) {
    const double mu = rng.uniform(1e-6, 10.0);
    double lam = rng.uniform(-3.0, 3.0);
    while (std::abs(std::abs(lam) - 1.0) < 1e-6) lam = rng.uniform(-3.0, 3.0);
    const double w = rng.uniform(1e-3, 10.0);

    const ScatteringAmplitudes solved = solve_scattering(mu, lam, w);
    const ScatteringAmplitudes closed =
        amplitudes(MirrorModel(DeltaDeltaPrime{mu, lam}), w);
    const double gap = std::max(
        std::max(std::abs(solved.s_plus - closed.s_plus),
                 std::abs(solved.s_minus - closed.s_minus)),
        std::max(std::abs(solved.r_plus - closed.r_plus),
                 std::abs(solved.r_minus - closed.r_minus)));
    suite.check(gap <= 1e-12, [&] {
      return "solver-vs-closed gap " + fmt(gap) + " at mu=" + fmt(mu) +
             " lambda=" + fmt(lam) + " omega=" + fmt(w);
    });

    for (Incidence inc : {Incidence::left, Incidence::right}) {
      const ModeSolution mode = solve_mode(mu, lam, w, inc);
      suite.check(flux_residual(mode) <= 1e-12,
                  [&] { return "flux defect at mu=" + fmt(mu) + " lambda=" + fmt(lam); });
      const auto [r1, r2] = matching_residual(mu, lam, boundary_data(mode));
      suite.check(r1 <= 1e-12 && r2 <= 1e-12, [&] {
        return "matching residuals (" + fmt(r1) + ", " + fmt(r2) + ") at mu=" +
               fmt(mu) + " lambda=" + fmt(lam) + " omega=" + fmt(w);
      });
      const double ur = u_matrix_residual(mu, lam, w, mode);
      suite.check(ur <= 1e-12, [&] {
        return "U-form residual " + fmt(ur) + " at mu=" + fmt(mu) +
               " lambda=" + fmt(lam) + " omega=" + fmt(w);
      });
    }
  }

  // lambda = 1 boundary conditions from the closed-form amplitudes.
  for (int i = 0; i < (quick ? 20 : 100); ++i) {
    const double mu = rng.uniform(1e-2, 10.0);
    const double w = rng.uniform(1e-3, 10.0);
    const ScatteringAmplitudes sa = amplitudes(MirrorModel(DeltaDeltaPrime{mu, 1.0}), w);
    for (Incidence inc : {Incidence::left, Incidence::right}) {
      const auto [robin, dirichlet] =
          robin_dirichlet_residual(mu, w, mode_from_amplitudes(sa, inc));
      suite.check(robin <= 1e-12 && dirichlet <= 1e-12, [&] {
        return "Robin/Dirichlet residuals (" + fmt(robin) + ", " + fmt(dirichlet) +
               ") at mu=" + fmt(mu) + " omega=" + fmt(w);
      });
    }
  }

  // The matching-condition singularity at lambda = ±1 is removable at the
  // level of the S-matrix elements.
  for (double lam1 : {1.0, -1.0}) {
    for (double side : {-1e-6, 1e-6}) {
      const double mu = 1.7, w = 0.9;
      const ScatteringAmplitudes near = solve_scattering(mu, lam1 + side, w);
      const ScatteringAmplitudes at =
          amplitudes(MirrorModel(DeltaDeltaPrime{mu, lam1}), w);
      const double gap = std::max(std::abs(near.s_plus - at.s_plus),
                                  std::abs(near.r_plus - at.r_plus));
      suite.check(gap <= 1e-4, [&] {
        return "lambda continuity gap " + fmt(gap) + " at lambda=" + fmt(lam1 + side);
      });
    }
  }
  return suite.take();
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyConfig& cfg) {
  return {scattering_suite(cfg.seed, cfg.quick), motion_suite(cfg.seed, cfg.quick),
          spectrum_suite(cfg.seed, cfg.quick), rates_suite(cfg.seed, cfg.quick),
          modes_suite(cfg.seed, cfg.quick)};
}

int verify_exit_code(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.passed()) return 1;
  return 0;
}

std::string format_verification_report(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  os << "suite         checks  failed  status\n";
  for (const auto& r : results) {
    char line[80];
    std::snprintf(line, sizeof(line), "%-12s %7d %7d  %s\n", r.suite.c_str(),
                  r.checked, r.failed, r.passed() ? "pass" : "FAIL");
    os << line;
    for (const auto& f : r.failures) os << "    failing case: " << f << '\n';
    for (const auto& n : r.notes) os << "    note: " << n << '\n';
  }
  return os.str();
}

}  // namespace dce
