#pragma once

/**
 * @file verify.hpp
 * @brief Identity suites over the algebraic and combinatorial engines.
 */

#include "parkqt/caps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parkqt {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string lhs;  // filled on failure
  std::string rhs;
  double seconds = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool ok() const;
  int failures() const;
  const CheckResult* first_failure() const;
  /// "macdonald: 412 checks, 0 failed (12.3 s)".
  std::string summary() const;
};

/// Unset bounds fall back to the per-suite defaults listed in suite_names().
struct VerifyConfig {
  std::optional<int> max_degree;
  std::optional<int> max_n;
  std::optional<int> max_J;
  std::optional<int> max_size;
  int degree_cap = kDefaultDegreeCap;
  int enum_cap = kDefaultEnumCap;
};

/// Suite names with a one-line description of the default bounds.
std::vector<std::pair<std::string, std::string>> suite_names();

/// Runs one suite; "all" runs every suite and concatenates the checks.
/// Throws std::invalid_argument for an unknown suite.
VerifyReport verify_suite(const std::string& name, const VerifyConfig& cfg = {});

}  // namespace parkqt
