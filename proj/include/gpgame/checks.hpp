#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpgame/version.hpp"

namespace gpgame {

/// Knobs for the release check suites.
struct CheckOptions {
  std::uint64_t seed = kDefaultSeed;
  long mc_samples = 200000;  // Monte Carlo budget for the sampled checks
  int n_threads = 1;
  /// Self-test hook: negates the cost estimate inside the monotonicity suite,
  /// which must make that suite fail.  Proves the harness detects violations
  /// rather than passing vacuously.
  bool inject_cost_sign_flip = false;
};

/// Outcome of one suite; failures holds details for the first few violations.
struct SuiteResult {
  std::string name;
  int n_checks = 0;
  int n_failed = 0;
  std::vector<std::string> failures;
  bool passed() const noexcept { return n_failed == 0; }
};

struct CheckReport {
  std::vector<SuiteResult> suites;
  bool passed() const noexcept;
  int total_checks() const noexcept;
  int total_failed() const noexcept;
};

/// Suite names in canonical order:
/// monotonicity, potential, nash, normalization, oracles.
const std::vector<std::string>& check_suite_names();

/// Runs one suite by name; throws Error(parse_error) for an unknown name.
SuiteResult run_check_suite(const std::string& name, const CheckOptions& options = {});

/// Runs the named suites, or every suite when names is empty.
CheckReport run_checks(const std::vector<std::string>& names = {},
                       const CheckOptions& options = {});

}  // namespace gpgame
