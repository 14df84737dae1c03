#pragma once

#include <numbers>

namespace polariton {

// Frequencies are carried in cm^-1 and times in fs. Exponents such as
// exp(-mu t) need the bridge 2*pi*c with c in cm/fs.
inline constexpr double kSpeedOfLightCmPerFs = 2.99792458e-5;
inline constexpr double kTwoPiC = 2.0 * std::numbers::pi * kSpeedOfLightCmPerFs;

/// Phase in radians accumulated at `freq_cm` (cm^-1) over `t_fs` (fs).
constexpr double time_phase(double freq_cm, double t_fs) noexcept {
  return kTwoPiC * freq_cm * t_fs;
}

/// Time expressed in the conjugate variable of cm^-1, i.e. time_phase(1, t).
constexpr double fs_to_inverse_wavenumber(double t_fs) noexcept { return kTwoPiC * t_fs; }

constexpr double inverse_wavenumber_to_fs(double theta) noexcept { return theta / kTwoPiC; }

}  // namespace polariton
