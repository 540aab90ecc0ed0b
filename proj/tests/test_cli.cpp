#include "dce/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dce/verify.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace dce;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "dce_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("grid parsing") {
  SUBCASE("linear") {
    const std::vector<double> g = parse_grid("-3:3:7");
    REQUIRE(g.size() == 7);
    CHECK(g.front() == -3.0);
    CHECK(g.back() == 3.0);
    CHECK(g[3] == 0.0);
  }
  SUBCASE("log") {
    const std::vector<double> g = parse_grid("0.1:10:3:log");
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 0.1);
    CHECK(g[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g[2] == 10.0);
  }
  SUBCASE("single point") {
    CHECK(parse_grid("2:2:1") == std::vector<double>{2.0});
  }
  SUBCASE("rejects malformed specs") {
    CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("1:2:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("1:2:5:cubic"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("-1:2:5:log"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("a:2:5"), std::invalid_argument);
  }
}

TEST_CASE("double formatting") {
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == format_double(1.0 / 3.0));
}

TEST_CASE("spectrum rows in figure units") {
  SpectrumOptions opt;
  opt.mu = 1.0;
  opt.lambda = 1.0;
  opt.points = 121;
  const std::vector<SpectrumRow> rows = spectrum_rows(opt);
  REQUIRE(rows.size() == 121);
  CHECK(rows.front().xi == 0.0);
  CHECK(rows.back().xi == doctest::Approx(1.2).epsilon(1e-15));

  for (const auto& r : rows) {
    if (r.xi >= 1.0) {
      CHECK(r.n_total == 0.0);  // cutoff at the carrier frequency
    } else {
      // Left side of the perfect delta-delta' mirror is the Dirichlet
      // parabola xi(1-xi)/2 in the figures' normalization.
      CHECK(r.n_minus ==
            doctest::Approx(r.xi * (1.0 - r.xi) / 2.0).epsilon(1e-13).scale(1.0));
    }
  }
  // The Robin side vanishes at xi = 1/2 when mu = omega0.
  const SpectrumRow& mid = rows[50];  // xi = 0.5 with 121 points to 1.2
  CHECK(mid.xi == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mid.n_plus <= 1e-14);
}

TEST_CASE("pure delta produces equal spectra on both sides") {
  SpectrumOptions opt;
  opt.mu = 1.0;
  opt.lambda = 0.0;
  opt.points = 61;
  for (const auto& r : spectrum_rows(opt)) CHECK(r.n_plus == r.n_minus);
}

TEST_CASE("spectrum CSV shape and determinism") {
  SpectrumOptions opt;
  opt.mu = 1.0;
  opt.lambda = 0.5;
  opt.points = 11;
  const std::string csv = spectrum_csv(spectrum_rows(opt));
  CHECK(csv.substr(0, 26) == "xi,n_plus,n_minus,n_total\n");
  CHECK(csv == spectrum_csv(spectrum_rows(opt)));
  // 1 header + points rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
}

TEST_CASE("scan CSV is lambda-major with an error column") {
  const MotionProfile p{0.01, 1.0, 1e3};
  const ScanGrid grid = scan_plane({0.5, 2.0}, {0.0, 1.0}, p);
  const std::string csv = scan_csv(grid);
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "mu_over_omega0,lambda,normalized,rate_plus,rate_minus,error");
  std::getline(ss, line);
  CHECK(line.substr(0, 6) == "0.5,0,");
  std::getline(ss, line);
  CHECK(line.substr(0, 4) == "2,0,");
  std::getline(ss, line);
  CHECK(line.substr(0, 6) == "0.5,1,");
}

TEST_CASE("ratio table") {
  RatioOptions opt;
  opt.lambda_list = "0,1";
  opt.mu_grid = "0.5:2:3:log";
  const RatioTable table = ratio_table(opt);
  REQUIRE(table.columns.size() == 2);
  REQUIRE(table.mu_over_omega0.size() == 3);
  for (double v : table.columns[0]) CHECK(v == 1.0);  // pure delta symmetry
  for (double v : table.columns[1]) CHECK(v < 1.0);   // Robin side inhibited

  const std::string csv = ratio_csv(table);
  CHECK(csv.substr(0, 45) ==
        "mu_over_omega0,ratio_lambda_0,ratio_lambda_1\n");
}

TEST_CASE("manifest sidecar is append-only JSON lines") {
  const fs::path dir = temp_dir();
  const fs::path out = dir / "manifest_probe.csv";
  fs::remove(out);
  fs::remove(dir / "manifest_probe.csv.manifest.json");

  RunManifest m;
  m.command = "spectrum";
  m.parameters = {{"mu", "1"}, {"lambda", "0.5"}};
  m.seed = 7;
  m.tool_version = "test";
  m.timestamp = "2025-01-01T00:00:00Z";
  m.output_paths = {out.string()};

  append_manifest(out.string(), m);
  append_manifest(out.string(), m);

  std::ifstream in(dir / "manifest_probe.csv.manifest.json");
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const auto j = nlohmann::json::parse(line);
    CHECK(j["command"] == "spectrum");
    CHECK(j["parameters"]["mu"] == "1");
    CHECK(j["seed"] == 7);
    CHECK(j["output_paths"][0] == out.string());
  }
  CHECK(lines == 2);
}

TEST_CASE("cmd_spectrum writes the file plus its manifest") {
  const fs::path dir = temp_dir();
  const fs::path out = dir / "spec_out.csv";
  fs::remove(out);
  fs::remove(dir / "spec_out.csv.manifest.json");

  SpectrumOptions opt;
  opt.mu = 1.0;
  opt.lambda = 1.0;
  opt.points = 5;
  opt.output = out.string();
  CHECK(cmd_spectrum(opt) == kExitOk);
  CHECK(fs::exists(out));
  CHECK(fs::exists(dir / "spec_out.csv.manifest.json"));
  const std::string body = read_file(out);
  CHECK(body.substr(0, 26) == "xi,n_plus,n_minus,n_total\n");

  // Identical flags regenerate byte-identical payloads.
  const fs::path out2 = dir / "spec_out_second.csv";
  SpectrumOptions opt2 = opt;
  opt2.output = out2.string();
  CHECK(cmd_spectrum(opt2) == kExitOk);
  CHECK(read_file(out2) == body);
}

TEST_CASE("json output embeds the manifest") {
  SpectrumOptions opt;
  opt.mu = 1.0;
  opt.lambda = 0.0;
  opt.points = 3;
  RunManifest m;
  m.command = "spectrum";
  m.tool_version = "test";
  const std::string payload = spectrum_json(spectrum_rows(opt), m);
  const auto j = nlohmann::json::parse(payload);
  CHECK(j.contains("manifest"));
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0].contains("n_total"));
}

TEST_CASE("verification exit codes") {
  SuiteResult pass;
  pass.suite = "x";
  pass.checked = 10;
  SuiteResult fail = pass;
  fail.failed = 1;
  fail.failures = {"case"};
  CHECK(verify_exit_code({pass, pass}) == 0);
  CHECK(verify_exit_code({pass, fail}) == 1);
  const std::string report = format_verification_report({pass, fail});
  CHECK(report.find("pass") != std::string::npos);
  CHECK(report.find("FAIL") != std::string::npos);
}

TEST_CASE("quick verification battery passes end to end") {
  const auto results = run_verification(VerifyConfig{20250814, true});
  for (const auto& r : results) {
    INFO(r.suite, ": ", r.failures.empty() ? "" : r.failures.front());
    CHECK(r.passed());
  }
  CHECK(verify_exit_code(results) == 0);
}
