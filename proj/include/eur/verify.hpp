#pragma once

// Seeded property suites covering the invariants of every module. Backs the
// `verify` subcommand; also callable from tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eur {

struct VerifyOptions {
  std::uint64_t seed = 20170101;
  std::size_t trials = 50;
  double tolerance = 1e-9;
  /// Adds one state with an eigenvalue far below the clamp window to the
  /// entropy suite, to exercise the failure path.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  /// JSON describing the first failing case, enough to replay it.
  std::optional<std::string> counterexample;

  bool ok() const noexcept { return passed == total; }
};

struct VerifyOutcome {
  std::vector<SuiteResult> suites;
  /// Observations that are reported but do not fail the run.
  std::vector<std::string> notes;

  bool ok() const noexcept;
};

VerifyOutcome run_verify(const VerifyOptions& options);

/// One "name passed/total" line per suite plus a summary line.
std::string render_summary(const VerifyOutcome& outcome);

}  // namespace eur
