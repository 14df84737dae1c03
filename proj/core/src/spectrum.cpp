#include "polariton/spectrum.hpp"

#include <fmt/format.h>

#include <cmath>

#include "polariton/error.hpp"

namespace polariton {

Axis Axis::make(double start, double stop, int count, double offset) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(offset)) {
    throw Error(ErrorCode::InvalidGrid, "axis bounds must be finite");
  }
  if (count < 2) throw Error(ErrorCode::InvalidGrid, fmt::format("axis count {} < 2", count));
  if (!(start < stop)) {
    throw Error(ErrorCode::InvalidGrid, fmt::format("axis start {} must be below stop {}", start, stop));
  }
  return Axis{start, stop, count, offset};
}

std::vector<double> Axis::points() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = at(k);
  return out;
}

void SpectrumGrid::check() const {
  const std::size_t expected = static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols());
  if (values.size() != expected) {
    throw Error(ErrorCode::InvalidGrid,
                fmt::format("grid holds {} values, axes need {}", values.size(), expected));
  }
}

}  // namespace polariton
