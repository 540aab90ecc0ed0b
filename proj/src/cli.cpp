#include "dce/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "dce/verify.hpp"
#include "dce/version.hpp"
#include "json.hpp"

namespace dce {

namespace {

using nlohmann::json;

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifest_to_json(const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  j["seed"] = m.seed;
  j["tool_version"] = m.tool_version;
  j["timestamp"] = m.timestamp;
  j["output_paths"] = m.output_paths;
  return j;
}

RunManifest make_manifest(const std::string& command,
                          std::map<std::string, std::string> parameters,
                          std::uint64_t seed, const std::string& output) {
  RunManifest m;
  m.command = command;
  m.parameters = std::move(parameters);
  m.seed = seed;
  m.tool_version = kToolVersion;
  m.timestamp = iso_timestamp();
  if (!output.empty()) m.output_paths.push_back(output);
  return m;
}

// Writes the payload to the output path (or stdout when empty) and appends
// the manifest sidecar for file outputs.
void emit(const std::string& output, const std::string& payload,
          const RunManifest& manifest) {
  if (output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(output, std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file: " + output);
  file << payload;
  file.close();
  append_manifest(output, manifest);
}

void print_warnings(const MotionProfile& p) {
  for (const auto& w : profile_warnings(p)) std::cerr << "warning: " << w << '\n';
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const QuadratureError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const NotUnimodalError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace

std::string manifest_json(const RunManifest& m) { return manifest_to_json(m).dump(); }

void append_manifest(const std::string& output_path, const RunManifest& m) {
  const std::string path = output_path + ".manifest.json";
  std::ofstream file(path, std::ios::app);
  if (!file) throw std::runtime_error("cannot open manifest file: " + path);
  file << manifest_json(m) << '\n';
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> tokens;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) tokens.push_back(tok);
  if (tokens.size() != 3 && tokens.size() != 4)
    throw std::invalid_argument("grid spec must be lo:hi:n or lo:hi:n:log|lin: " + spec);

  double lo, hi;
  int n;
  try {
    lo = std::stod(tokens[0]);
    hi = std::stod(tokens[1]);
    n = std::stoi(tokens[2]);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid spec has non-numeric fields: " + spec);
  }
  bool log_spaced = false;
  if (tokens.size() == 4) {
    if (tokens[3] == "log")
      log_spaced = true;
    else if (tokens[3] != "lin")
      throw std::invalid_argument("grid spacing must be log or lin: " + spec);
  }
  if (n < 1) throw std::invalid_argument("grid needs at least one point: " + spec);
  if (n == 1) {
    if (lo != hi) throw std::invalid_argument("single-point grid needs lo == hi: " + spec);
    return {lo};
  }
  if (log_spaced && !(lo > 0.0 && hi > 0.0))
    throw std::invalid_argument("log grid needs positive bounds: " + spec);

  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    grid[i] = log_spaced ? std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * f)
                         : lo + (hi - lo) * f;
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> parse_double_list(const std::string& spec) {
  std::vector<double> values;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      values.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("non-numeric list entry: " + tok);
    }
  }
  if (values.empty()) throw std::invalid_argument("empty list: " + spec);
  return values;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::vector<SpectrumRow> spectrum_rows(const SpectrumOptions& opt) {
  if (opt.points < 2) throw std::invalid_argument("--points must be at least 2");
  if (!(opt.xi_max > 0.0)) throw std::invalid_argument("xi range must be positive");
  const MotionProfile p{opt.eps, opt.omega0, opt.tau};
  validate_profile(p);
  const MirrorModel model = DeltaDeltaPrime{opt.mu, opt.lambda};
  const double scale = opt.raw ? 1.0 : std::numbers::pi / (opt.eps * opt.eps);

  std::vector<SpectrumRow> rows;
  rows.reserve(opt.points);
  for (int i = 0; i < opt.points; ++i) {
    const double xi = opt.xi_max * i / (opt.points - 1);
    const double w = xi * opt.omega0;
    const SpectrumSample s = opt.finite_tau
                                 ? spectrum_finite_tau(model, p, std::max(w, 1e-12))
                                 : spectrum_mono(model, p, w);
    rows.push_back({xi, scale * s.n_plus_per_tau, scale * s.n_minus_per_tau,
                    scale * s.n_total_per_tau});
  }
  return rows;
}

std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
  std::string out = "xi,n_plus,n_minus,n_total\n";
  for (const auto& r : rows) {
    out += format_double(r.xi);
    out += ',';
    out += format_double(r.n_plus);
    out += ',';
    out += format_double(r.n_minus);
    out += ',';
    out += format_double(r.n_total);
    out += '\n';
  }
  return out;
}

std::string spectrum_json(const std::vector<SpectrumRow>& rows, const RunManifest& m) {
  json j;
  j["manifest"] = manifest_to_json(m);
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"xi", r.xi},
                   {"n_plus", r.n_plus},
                   {"n_minus", r.n_minus},
                   {"n_total", r.n_total}});
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

std::string scan_csv(const ScanGrid& grid) {
  std::string out = "mu_over_omega0,lambda,normalized,rate_plus,rate_minus,error\n";
  const double nan = std::nan("");
  for (std::size_t il = 0; il < grid.lambda.size(); ++il) {
    for (std::size_t im = 0; im < grid.mu_over_omega0.size(); ++im) {
      const ScanCell& cell = grid.at(il, im);
      const RateSummary& s = cell.summary;
      out += format_double(grid.mu_over_omega0[im]);
      out += ',';
      out += format_double(grid.lambda[il]);
      out += ',';
      out += format_double(cell.ok() ? s.normalized : nan);
      out += ',';
      out += format_double(cell.ok() ? s.rate_plus_per_tau : nan);
      out += ',';
      out += format_double(cell.ok() ? s.rate_minus_per_tau : nan);
      out += ',';
      std::string msg = cell.error;
      for (char& c : msg)
        if (c == ',' || c == '\n') c = ';';
      out += msg;
      out += '\n';
    }
  }
  return out;
}

RatioTable ratio_table(const RatioOptions& opt) {
  RatioTable table;
  table.mu_over_omega0 = parse_grid(opt.mu_grid);
  table.lambdas = parse_double_list(opt.lambda_list);
  const MotionProfile p{opt.eps, opt.omega0, opt.tau};
  validate_profile(p);
  for (double lam : table.lambdas) {
    std::vector<double> column;
    column.reserve(table.mu_over_omega0.size());
    for (double mu : table.mu_over_omega0)
      column.push_back(sides_ratio(mu * opt.omega0, lam, p));
    table.columns.push_back(std::move(column));
  }
  return table;
}

std::string ratio_csv(const RatioTable& table) {
  std::string out = "mu_over_omega0";
  for (double lam : table.lambdas) {
    out += ",ratio_lambda_";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", lam);
    out += buf;
  }
  out += '\n';
  for (std::size_t i = 0; i < table.mu_over_omega0.size(); ++i) {
    out += format_double(table.mu_over_omega0[i]);
    for (const auto& column : table.columns) {
      out += ',';
      out += format_double(column[i]);
    }
    out += '\n';
  }
  return out;
}

int cmd_spectrum(const SpectrumOptions& opt) {
  return run_guarded([&] {
    if (opt.format != "csv" && opt.format != "json")
      throw std::invalid_argument("--out must be csv or json");
    print_warnings(MotionProfile{opt.eps, opt.omega0, opt.tau});
    const std::vector<SpectrumRow> rows = spectrum_rows(opt);
    const RunManifest manifest = make_manifest(
        "spectrum",
        {{"mu", format_double(opt.mu)},
         {"lambda", format_double(opt.lambda)},
         {"omega0", format_double(opt.omega0)},
         {"eps", format_double(opt.eps)},
         {"tau", format_double(opt.tau)},
         {"points", std::to_string(opt.points)},
         {"xi_max", format_double(opt.xi_max)},
         {"mode", opt.finite_tau ? "finite" : "mono"},
         {"raw", opt.raw ? "true" : "false"},
         {"out", opt.format}},
        opt.seed, opt.output);
    emit(opt.output,
         opt.format == "csv" ? spectrum_csv(rows) : spectrum_json(rows, manifest),
         manifest);
    return kExitOk;
  });
}

int cmd_scan(const ScanOptions& opt) {
  return run_guarded([&] {
    const MotionProfile p{opt.eps, opt.omega0, opt.tau};
    print_warnings(p);
    const ScanGrid grid =
        scan_plane(parse_grid(opt.mu_grid), parse_grid(opt.lambda_grid), p, {}, opt.workers);
    const RunManifest manifest = make_manifest(
        "scan",
        {{"mu-grid", opt.mu_grid},
         {"lambda-grid", opt.lambda_grid},
         {"omega0", format_double(opt.omega0)},
         {"eps", format_double(opt.eps)},
         {"tau", format_double(opt.tau)},
         {"workers", std::to_string(opt.workers)}},
        opt.seed, opt.output);
    emit(opt.output, scan_csv(grid), manifest);
    return kExitOk;
  });
}

int cmd_ratio(const RatioOptions& opt) {
  return run_guarded([&] {
    print_warnings(MotionProfile{opt.eps, opt.omega0, opt.tau});
    const RatioTable table = ratio_table(opt);
    const RunManifest manifest = make_manifest(
        "ratio",
        {{"lambda-list", opt.lambda_list},
         {"mu-grid", opt.mu_grid},
         {"omega0", format_double(opt.omega0)},
         {"eps", format_double(opt.eps)},
         {"tau", format_double(opt.tau)}},
        opt.seed, opt.output);
    emit(opt.output, ratio_csv(table), manifest);
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& opt) {
  try {
    const std::vector<SuiteResult> results =
        run_verification(VerifyConfig{opt.seed, opt.quick});
    std::cout << format_verification_report(results);
    return verify_exit_code(results);
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace dce
