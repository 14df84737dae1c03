#include "polariton/model.hpp"

#include <fmt/format.h>

#include <limits>

namespace polariton {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveRate: return "NonPositiveRate";
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::NegativeWaitingTime: return "NegativeWaitingTime";
    case ErrorCode::DivergentTransform: return "DivergentTransform";
    case ErrorCode::DegenerateBright: return "DegenerateBright";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool Error::is_numeric() const noexcept {
  switch (code_) {
    case ErrorCode::NegativeTime:
    case ErrorCode::NegativeWaitingTime:
    case ErrorCode::DivergentTransform:
    case ErrorCode::DegenerateBright:
    case ErrorCode::TooLarge:
      return true;
    default:
      return false;
  }
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid parameters:";
  for (const auto& v : violations) {
    out += fmt::format(" [{}] {}: {};", to_string(v.code), v.field, v.message);
  }
  return out;
}

ErrorCode first_code(const std::vector<Violation>& violations) {
  return violations.empty() ? ErrorCode::InvalidArgument : violations.front().code;
}

}  // namespace

ParamError::ParamError(std::vector<Violation> violations)
    : Error(first_code(violations), join_violations(violations)),
      violations_(std::move(violations)) {}

SystemParams validate_params(const RawParams& raw) {
  std::vector<Violation> bad;

  const std::pair<const char*, double> finite_fields[] = {
      {"g", raw.g},           {"delta_x", raw.delta_x}, {"delta_c", raw.delta_c},
      {"gamma_x", raw.gamma_x}, {"gamma_c", raw.gamma_c}, {"omega_v", raw.omega_v},
      {"gamma_v", raw.gamma_v}, {"lambda_hr", raw.lambda_hr}, {"omega_ref", raw.omega_ref},
      {"dipole", raw.dipole}, {"phase", raw.phase},
  };
  for (const auto& [name, value] : finite_fields) {
    if (!std::isfinite(value)) {
      bad.push_back({ErrorCode::NonFinite, name, "must be finite"});
    }
  }

  if (raw.n_molecules < 1) {
    bad.push_back({ErrorCode::NegativeCount, "n_molecules",
                   fmt::format("must be >= 1, got {}", raw.n_molecules)});
  }

  const std::pair<const char*, double> rates[] = {
      {"gamma_x", raw.gamma_x}, {"gamma_c", raw.gamma_c},
      {"gamma_v", raw.gamma_v}, {"omega_v", raw.omega_v},
  };
  for (const auto& [name, value] : rates) {
    if (std::isfinite(value) && !(value > 0.0)) {
      bad.push_back({ErrorCode::NonPositiveRate, name, fmt::format("must be > 0, got {}", value)});
    }
  }

  if (std::isfinite(raw.lambda_hr) && raw.lambda_hr < 0.0) {
    bad.push_back({ErrorCode::InvalidArgument, "lambda_hr", "must be >= 0"});
  }
  if (std::isfinite(raw.dipole) && !(raw.dipole > 0.0)) {
    bad.push_back({ErrorCode::InvalidArgument, "dipole", "must be > 0"});
  }

  if (raw.n_molecules >= 1 && std::isfinite(raw.g)) {
    const double rabi = 2.0 * std::abs(raw.g) * std::sqrt(static_cast<double>(raw.n_molecules));
    if (!std::isfinite(rabi) || rabi > std::numeric_limits<double>::max() / 4) {
      bad.push_back({ErrorCode::NonFinite, "g", "Rabi splitting 2 g sqrt(N) overflows"});
    }
  }

  if (!bad.empty()) throw ParamError(std::move(bad));
  return SystemParams(raw);
}

SystemParams reference_params(double lambda_hr, double g_sqrt_n, int n_molecules) {
  RawParams raw;
  raw.n_molecules = n_molecules;
  raw.g = g_sqrt_n / std::sqrt(static_cast<double>(n_molecules));
  raw.lambda_hr = lambda_hr;
  return validate_params(raw);
}

DerivedQuantities derived_quantities(const SystemParams& sys) noexcept {
  const double gn = sys.collective_coupling();
  DerivedQuantities d{};
  d.rabi_splitting = 2.0 * gn;
  d.bright_freqs_resonant = {sys.delta_x() - gn, sys.delta_x() + gn};
  d.polaron_shift = 2.0 * sys.lambda_hr() * sys.lambda_hr() * sys.omega_v();
  d.axis_offset = sys.axis_offset();
  d.omega_ref = sys.omega_ref();
  d.omega_v = sys.omega_v();
  return d;
}

PulseSchedule make_pulse_schedule(double t1, double t2, double t3) {
  if (!(t1 <= t2 && t2 <= t3)) {
    throw Error(ErrorCode::NegativeTime,
                fmt::format("pulses must be time ordered, got t1={} t2={} t3={}", t1, t2, t3));
  }
  PulseSchedule p;
  p.t1 = t1;
  p.t2 = t2;
  p.t3 = t3;
  return p;
}

}  // namespace polariton
