#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dce/rates.hpp"

namespace dce {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

// Reproducibility record written as one JSON line per run into the
// append-only sidecar "<output>.manifest.json".
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::string timestamp;
  std::vector<std::string> output_paths;
};

std::string manifest_json(const RunManifest& m);
void append_manifest(const std::string& output_path, const RunManifest& m);

// Parses "lo:hi:n" or "lo:hi:n:log|lin" into a grid of n values.
std::vector<double> parse_grid(const std::string& spec);

// Comma-separated doubles ("0,0.5,1").
std::vector<double> parse_double_list(const std::string& spec);

// Doubles formatted with 17 significant digits; NaN spelled "nan".
std::string format_double(double x);

struct SpectrumOptions {
  double mu = 1.0;
  double lambda = 0.0;
  double omega0 = 1.0;
  double eps = 0.01;
  double tau = 1000.0;
  int points = 121;
  double xi_max = 1.2;
  bool finite_tau = false;  // --mode mono|finite
  bool raw = false;         // raw per-tau densities instead of figure units
  std::string format = "csv";
  std::string output;  // empty -> stdout
  std::uint64_t seed = 0;
};

// One emitted spectrum row. Values are (pi/eps^2) * N±/tau (the figures'
// normalization) unless raw output was requested.
struct SpectrumRow {
  double xi = 0.0;
  double n_plus = 0.0;
  double n_minus = 0.0;
  double n_total = 0.0;
};

std::vector<SpectrumRow> spectrum_rows(const SpectrumOptions& opt);
std::string spectrum_csv(const std::vector<SpectrumRow>& rows);
std::string spectrum_json(const std::vector<SpectrumRow>& rows, const RunManifest& m);

struct ScanOptions {
  std::string mu_grid = "0.1:10:21:log";
  std::string lambda_grid = "-3:3:21";
  double omega0 = 1.0;
  double eps = 0.01;
  double tau = 1000.0;
  int workers = 0;
  std::string output;
  std::uint64_t seed = 0;
};

std::string scan_csv(const ScanGrid& grid);

struct RatioOptions {
  std::string lambda_list = "0,0.5,1,2";
  std::string mu_grid = "0.1:10:41:log";
  double omega0 = 1.0;
  double eps = 0.01;
  double tau = 1000.0;
  std::string output;
  std::uint64_t seed = 0;
};

struct RatioTable {
  std::vector<double> mu_over_omega0;
  std::vector<double> lambdas;
  std::vector<std::vector<double>> columns;  // one per lambda
};

RatioTable ratio_table(const RatioOptions& opt);
std::string ratio_csv(const RatioTable& table);

struct VerifyOptions {
  std::uint64_t seed = 20250814;
  bool quick = false;
};

// Subcommand drivers: compute, write the payload (file or stdout), append the
// manifest when writing to a file, and map failures onto exit codes.
int cmd_spectrum(const SpectrumOptions& opt);
int cmd_scan(const ScanOptions& opt);
int cmd_ratio(const RatioOptions& opt);
int cmd_verify(const VerifyOptions& opt);

}  // namespace dce
