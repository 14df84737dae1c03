#pragma once

#include <cmath>
#include <numbers>
#include <utility>

#include "polariton/error.hpp"

namespace polariton {

/// Unvalidated parameter record. Defaults reproduce the cyanine-dye reference
/// system (N = 10, g*sqrt(N) = 1800 cm^-1, omega_v = 1200 cm^-1, lambda = 1).
/// All frequencies and rates in cm^-1.
struct RawParams {
  int n_molecules = 10;
  double g = 1800.0 / std::sqrt(10.0);
  double delta_x = 0.0;   // dressed exciton detuning (rotating frame)
  double delta_c = 0.0;   // cavity detuning
  double gamma_x = 1.0;   // exciton dephasing
  double gamma_c = 0.9;   // cavity leakage
  double omega_v = 1200.0;
  double gamma_v = 20.0;  // vibrational damping
  double lambda_hr = 1.0; // dimensionless displacement; Huang-Rhys factor is lambda^2
  double omega_ref = 16113.0;
  double dipole = 1.0;
  double phase = 0.0;     // global four-pulse phase, rad
};

/// Validated, immutable system parameters of the Holstein-Tavis-Cummings
/// model with Langevin damping. Only obtainable through validate_params().
class SystemParams {
 public:
  int n_molecules() const noexcept { return raw_.n_molecules; }
  double g() const noexcept { return raw_.g; }
  double delta_x() const noexcept { return raw_.delta_x; }
  double delta_c() const noexcept { return raw_.delta_c; }
  double gamma_x() const noexcept { return raw_.gamma_x; }
  double gamma_c() const noexcept { return raw_.gamma_c; }
  double omega_v() const noexcept { return raw_.omega_v; }
  double gamma_v() const noexcept { return raw_.gamma_v; }
  double lambda_hr() const noexcept { return raw_.lambda_hr; }
  double omega_ref() const noexcept { return raw_.omega_ref; }
  double dipole() const noexcept { return raw_.dipole; }
  double phase() const noexcept { return raw_.phase; }

  /// Collective coupling g*sqrt(N).
  double collective_coupling() const noexcept {
    return raw_.g * std::sqrt(static_cast<double>(raw_.n_molecules));
  }

  /// Shift from rotating-frame frequencies to the absolute axis.
  double axis_offset() const noexcept { return raw_.omega_ref - raw_.delta_x; }

  const RawParams& raw() const noexcept { return raw_; }

 private:
  friend SystemParams validate_params(const RawParams& raw);
  explicit SystemParams(const RawParams& raw) : raw_(raw) {}

  RawParams raw_;
};

/// Checks every invariant and throws ParamError listing all violations.
SystemParams validate_params(const RawParams& raw);

/// The reference system with a chosen coupling/displacement; convenient for
/// tests and examples.
SystemParams reference_params(double lambda_hr = 1.0, double g_sqrt_n = 1800.0, int n_molecules = 10);

struct DerivedQuantities {
  double rabi_splitting;
  /// delta_x -/+ g sqrt(N), rotating frame; exact only when delta_x == delta_c.
  std::pair<double, double> bright_freqs_resonant;
  double polaron_shift;
  double axis_offset;
  double omega_ref;
  double omega_v;

  /// Emitter-dark-state ladder omega_ref -/+ m omega_v on the absolute axis.
  std::pair<double, double> eds_ladder(int m) const noexcept {
    return {omega_ref - m * omega_v, omega_ref + m * omega_v};
  }
};

DerivedQuantities derived_quantities(const SystemParams& sys) noexcept;

/// Impulsive pulse arrival times (fs) and field amplitudes.
struct PulseSchedule {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double omega1 = 1.0;
  double omega2 = 1.0;
  double omega3 = 1.0;
  double e_lo = 1.0;

  double coherence_time() const noexcept { return t2 - t1; }
  double waiting_time() const noexcept { return t3 - t2; }
};

/// Throws Error(NegativeTime) unless t1 <= t2 <= t3.
PulseSchedule make_pulse_schedule(double t1, double t2, double t3);

}  // namespace polariton
