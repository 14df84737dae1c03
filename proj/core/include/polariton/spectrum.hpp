#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polariton {

/// Uniform frequency axis. start/stop are absolute (lab-frame) cm^-1; the
/// kernels see at(k) - offset.
struct Axis {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  double offset = 0.0;

  /// Throws Error(InvalidGrid) unless count >= 2, start < stop, all finite.
  static Axis make(double start, double stop, int count, double offset = 0.0);

  double step() const noexcept { return (stop - start) / (count - 1); }
  double at(int k) const noexcept { return k + 1 == count ? stop : start + k * step(); }
  double rotating(int k) const noexcept { return at(k) - offset; }
  std::vector<double> points() const;
};

/// 1D or 2D sampled spectrum. For 2D data values are row-major with axis1
/// (omega1) as the slow index.
struct SpectrumGrid {
  Axis axis1;
  std::optional<Axis> axis2;
  double waiting_time = 0.0;
  std::vector<std::complex<double>> values;
  std::map<std::string, std::string> metadata;

  bool is_2d() const noexcept { return axis2.has_value(); }
  int rows() const noexcept { return axis1.count; }
  int cols() const noexcept { return axis2 ? axis2->count : 1; }
  std::complex<double>& at(int r, int c = 0) { return values[static_cast<std::size_t>(r) * cols() + c]; }
  const std::complex<double>& at(int r, int c = 0) const {
    return values[static_cast<std::size_t>(r) * cols() + c];
  }

  /// Throws Error(InvalidGrid) if values.size() disagrees with the axes.
  void check() const;
};

}  // namespace polariton
