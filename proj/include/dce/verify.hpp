#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dce {

// Outcome of one property battery. `failures` holds reproduction inputs for
// the first few failing cases; `notes` carry informational observations that
// do not fail the suite.
struct SuiteResult {
  std::string suite;
  int checked = 0;
  int failed = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool passed() const { return failed == 0; }
};

struct VerifyConfig {
  std::uint64_t seed = 20250814;
  bool quick = false;
};

// Runs the scattering / motion / spectrum / rates / modes property batteries.
std::vector<SuiteResult> run_verification(const VerifyConfig& cfg);

// 0 when every suite passed, 1 otherwise.
int verify_exit_code(const std::vector<SuiteResult>& results);

// Pass/fail table for terminal output.
std::string format_verification_report(const std::vector<SuiteResult>& results);

}  // namespace dce
