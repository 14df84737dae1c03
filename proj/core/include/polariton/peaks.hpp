#pragma once

#include <span>
#include <string>
#include <vector>

#include "polariton/signals.hpp"
#include "polariton/spectrum.hpp"

namespace polariton {

struct Peak1D {
  int index = 0;
  double position = 0.0;  // grid coordinate
  double refined = 0.0;   // parabolic vertex of the smoothed magnitude
  double height = 0.0;    // unsmoothed magnitude at index
  double smoothed = 0.0;
};

/// Strict local maxima of the [1, 2, 1]/4-smoothed magnitude, interior points
/// only, sorted by descending height.
std::vector<Peak1D> find_peaks_1d(std::span<const double> values, const Axis& axis);

enum class PeakKind { Diagonal, Vibronic, Coherence, Unassigned };

struct Peak2D {
  int row = 0;  // axis1 (omega1) index
  int col = 0;  // axis2 (omega3) index
  double omega1 = 0.0;
  double omega3 = 0.0;
  double refined1 = 0.0;
  double refined3 = 0.0;
  double height = 0.0;
  double smoothed = 0.0;
  PeakKind kind = PeakKind::Unassigned;
  int k = 0;          // omega1 - omega3 = k omega_v for Vibronic peaks
  std::string label;  // e.g. "UP+0/D-1" for Coherence peaks
};

/// Strict maxima over the 8-neighbourhood of the 3x3 binomial-smoothed
/// magnitude; values are row-major rows x cols.
std::vector<Peak2D> find_peaks_2d(std::span<const double> values, const Axis& axis1, const Axis& axis2);

/// Peaks whose smoothed height is at least `fraction` of the largest one.
template <typename P>
std::vector<P> dominant_peaks(const std::vector<P>& peaks, double fraction = 0.05) {
  double top = 0.0;
  for (const auto& p : peaks) top = top > p.smoothed ? top : p.smoothed;
  std::vector<P> out;
  for (const auto& p : peaks)
    if (p.smoothed >= fraction * top) out.push_back(p);
  return out;
}

/// Tags a peak: Diagonal if omega1 ~ omega3, Vibronic(k) if the difference is
/// k omega_v, Coherence if both coordinates sit on mode lines shifted by
/// multiples of omega_v (|m| <= max_order), otherwise Unassigned.
void classify_peak(Peak2D& peak, const ModeLines& lines, double omega_v, double tol, int max_order = 4);

std::string to_string(PeakKind kind);

}  // namespace polariton
