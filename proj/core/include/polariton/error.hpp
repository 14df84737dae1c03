#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polariton {

enum class ErrorCode {
  NonPositiveRate,
  NegativeCount,
  NonFinite,
  NegativeTime,
  NegativeWaitingTime,
  DivergentTransform,
  DegenerateBright,
  TooLarge,
  InvalidGrid,
  InvalidArgument,
  Config,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for everything thrown by the library. Carries a machine
/// readable code so front ends can map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures raised by the numerics (as opposed to bad input
  /// records or file handling).
  bool is_numeric() const noexcept;

 private:
  ErrorCode code_;
};

struct Violation {
  ErrorCode code;
  std::string field;
  std::string message;
};

/// Raised by parameter validation; lists every violated invariant, not just
/// the first one found.
class ParamError : public Error {
 public:
  explicit ParamError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace polariton
