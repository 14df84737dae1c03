#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polariton/model.hpp"

namespace polariton::cli {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
  std::string note;
};

struct ValidateOptions {
  /// Reference system for the checks that use one (ratios, slices, quadrature).
  RawParams system;
  /// Drops the (-1)^(m3 + m6) sign in the class kernel; the direct-loop check
  /// must then fail.
  bool inject_parity_fault = false;
};

/// Runs every oracle pair with fixed seeds.
std::vector<CheckResult> validate_suite(const ValidateOptions& opts = {});

nlohmann::json to_json(const std::vector<CheckResult>& results);

}  // namespace polariton::cli
