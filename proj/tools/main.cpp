// Command-line front end: particle-creation spectra, total rates, parameter
// scans and the verification battery for delta-delta' moving mirrors.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dce/cli.hpp"
#include "dce/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Particle creation by an oscillating delta-delta' mirror"};
  app.set_version_flag("--version", std::string(dce::kToolVersion));
  app.require_subcommand(1);

  dce::SpectrumOptions spec;
  std::string mode = "mono";
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Per-frequency spectrum N±(omega)/tau at fixed couplings");
  spectrum->add_option("--mu", spec.mu, "delta coupling (frequency units)")->required();
  spectrum->add_option("--lambda", spec.lambda, "delta' coupling (dimensionless)")
      ->required();
  spectrum->add_option("--omega0", spec.omega0, "carrier frequency");
  spectrum->add_option("--eps", spec.eps, "oscillation amplitude");
  spectrum->add_option("--tau", spec.tau, "effective oscillation time");
  spectrum->add_option("--points", spec.points, "number of xi samples");
  spectrum->add_option("--xi-max", spec.xi_max, "upper end of the xi = omega/omega0 range");
  spectrum->add_option("--mode", mode, "mono (omega0*tau -> inf limit) or finite")
      ->check(CLI::IsMember({"mono", "finite"}));
  spectrum->add_option("--out", spec.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_flag("--raw", spec.raw, "emit raw N±/tau instead of figure units");
  spectrum->add_option("--output", spec.output, "output file (stdout when omitted)");
  spectrum->add_option("--seed", spec.seed, "seed recorded in the manifest");

  dce::ScanOptions scan;
  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "Total-rate scan over the (mu/omega0, lambda) plane");
  scan_cmd->add_option("--mu-grid", scan.mu_grid, "mu/omega0 grid, lo:hi:n[:log|lin]");
  scan_cmd->add_option("--lambda-grid", scan.lambda_grid, "lambda grid, lo:hi:n[:lin]");
  scan_cmd->add_option("--omega0", scan.omega0, "carrier frequency");
  scan_cmd->add_option("--eps", scan.eps, "oscillation amplitude");
  scan_cmd->add_option("--tau", scan.tau, "effective oscillation time");
  scan_cmd->add_option("--workers", scan.workers,
                       "worker threads (0: DCE_WORKERS env or hardware)");
  scan_cmd->add_option("--output", scan.output, "output file (stdout when omitted)");
  scan_cmd->add_option("--seed", scan.seed, "seed recorded in the manifest");

  dce::RatioOptions ratio;
  CLI::App* ratio_cmd = app.add_subcommand(
      "ratio", "Side asymmetry N+/N- as a function of mu/omega0");
  ratio_cmd->add_option("--lambda-list", ratio.lambda_list, "comma-separated lambdas");
  ratio_cmd->add_option("--mu-grid", ratio.mu_grid, "mu/omega0 grid, lo:hi:n[:log|lin]");
  ratio_cmd->add_option("--omega0", ratio.omega0, "carrier frequency");
  ratio_cmd->add_option("--eps", ratio.eps, "oscillation amplitude");
  ratio_cmd->add_option("--tau", ratio.tau, "effective oscillation time");
  ratio_cmd->add_option("--output", ratio.output, "output file (stdout when omitted)");
  ratio_cmd->add_option("--seed", ratio.seed, "seed recorded in the manifest");

  dce::VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run every invariant battery and report");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed for the property draws");
  verify_cmd->add_flag("--quick", verify.quick, "reduced draw counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dce::kExitUsage;
  }

  if (spectrum->parsed()) {
    spec.finite_tau = (mode == "finite");
    return dce::cmd_spectrum(spec);
  }
  if (scan_cmd->parsed()) return dce::cmd_scan(scan);
  if (ratio_cmd->parsed()) return dce::cmd_ratio(ratio);
  if (verify_cmd->parsed()) return dce::cmd_verify(verify);
  std::cerr << "no subcommand given\n";
  return dce::kExitUsage;
}
