#include "polariton/peaks.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace polariton {

namespace {

constexpr std::array<double, 3> kBinomial{0.25, 0.5, 0.25};

// Edge samples are replicated so the smoothed array has the input's shape.
std::vector<double> smooth_1d(std::span<const double> v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> out(v.size());
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int d = -1; d <= 1; ++d) s += kBinomial[d + 1] * std::abs(v[std::clamp(k + d, 0, n - 1)]);
    out[k] = s;
  }
  return out;
}

std::vector<double> smooth_2d(std::span<const double> v, int rows, int cols) {
  std::vector<double> out(v.size());
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      double s = 0.0;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          const int rr = std::clamp(r + dr, 0, rows - 1);
          const int cc = std::clamp(c + dc, 0, cols - 1);
          s += kBinomial[dr + 1] * kBinomial[dc + 1] * std::abs(v[rr * cols + cc]);
        }
      out[r * cols + c] = s;
    }
  return out;
}

// Vertex offset (in steps) of the parabola through three samples.
double vertex(double left, double mid, double right) noexcept {
  const double curv = left - 2.0 * mid + right;
  if (curv >= 0.0) return 0.0;
  return std::clamp(0.5 * (left - right) / curv, -0.5, 0.5);
}

}  // namespace

std::vector<Peak1D> find_peaks_1d(std::span<const double> values, const Axis& axis) {
  if (static_cast<int>(values.size()) != axis.count) {
    throw Error(ErrorCode::InvalidGrid, "peak search: value count does not match axis");
  }
  const auto s = smooth_1d(values);
  std::vector<Peak1D> out;
  for (int k = 1; k + 1 < axis.count; ++k) {
    if (!(s[k] > s[k - 1] && s[k] > s[k + 1])) continue;
    Peak1D p;
    p.index = k;
    p.position = axis.at(k);
    p.refined = p.position + vertex(s[k - 1], s[k], s[k + 1]) * axis.step();
    p.height = std::abs(values[k]);
    p.smoothed = s[k];
    out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.height > b.height; });
  return out;
}

std::vector<Peak2D> find_peaks_2d(std::span<const double> values, const Axis& axis1, const Axis& axis2) {
  const int rows = axis1.count;
  const int cols = axis2.count;
  if (values.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorCode::InvalidGrid, "peak search: value count does not match axes");
  }
  const auto s = smooth_2d(values, rows, cols);
  const auto at = [&](int r, int c) { return s[r * cols + c]; };
  std::vector<Peak2D> out;
  for (int r = 1; r + 1 < rows; ++r)
    for (int c = 1; c + 1 < cols; ++c) {
      const double v = at(r, c);
      bool strict = true;
      for (int dr = -1; dr <= 1 && strict; ++dr)
        for (int dc = -1; dc <= 1; ++dc)
          if ((dr != 0 || dc != 0) && !(v > at(r + dr, c + dc))) {
            strict = false;
            break;
          }
      if (!strict) continue;
      Peak2D p;
      p.row = r;
      p.col = c;
      p.omega1 = axis1.at(r);
      p.omega3 = axis2.at(c);
      p.refined1 = p.omega1 + vertex(at(r - 1, c), v, at(r + 1, c)) * axis1.step();
      p.refined3 = p.omega3 + vertex(at(r, c - 1), v, at(r, c + 1)) * axis2.step();
      p.height = std::abs(values[r * cols + c]);
      p.smoothed = v;
      out.push_back(p);
    }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.height > b.height; });
  return out;
}

namespace {

std::optional<std::string> on_line(double w, const ModeLines& lines, double omega_v, double tol,
                                   int max_order) {
  const std::array<std::pair<const char*, double>, 3> modes{
      {{"LP", lines.lower}, {"UP", lines.upper}, {"D", lines.dark}}};
  // Several lines can coincide (e.g. a Rabi splitting of 3 omega_v); the
  // smallest vibrational shift wins.
  std::optional<std::string> best;
  int best_m = max_order + 1;
  for (const auto& [name, base] : modes) {
    const int m = static_cast<int>(std::lround((w - base) / omega_v));
    if (std::abs(m) < best_m && std::abs(w - base - m * omega_v) <= tol) {
      best = fmt::format("{}{:+d}", name, m);
      best_m = std::abs(m);
    }
  }
  return best;
}

}  // namespace

void classify_peak(Peak2D& peak, const ModeLines& lines, double omega_v, double tol, int max_order) {
  const double diff = peak.refined1 - peak.refined3;
  peak.k = 0;
  peak.label.clear();
  if (std::abs(diff) <= tol) {
    peak.kind = PeakKind::Diagonal;
    return;
  }
  const int k = static_cast<int>(std::lround(diff / omega_v));
  if (k != 0 && std::abs(diff - k * omega_v) <= tol) {
    peak.kind = PeakKind::Vibronic;
    peak.k = k;
    return;
  }
  const auto a = on_line(peak.refined1, lines, omega_v, tol, max_order);
  const auto b = on_line(peak.refined3, lines, omega_v, tol, max_order);
  if (a && b) {
    peak.kind = PeakKind::Coherence;
    peak.label = *a + "/" + *b;
    return;
  }
  peak.kind = PeakKind::Unassigned;
}

std::string to_string(PeakKind kind) {
  switch (kind) {
    case PeakKind::Diagonal: return "diagonal";
    case PeakKind::Vibronic: return "vibronic";
    case PeakKind::Coherence: return "coherence";
    case PeakKind::Unassigned: return "unassigned";
  }
  return "unknown";
}

}  // namespace polariton
