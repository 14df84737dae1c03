#include <fmt/format.h>

#include <cmath>

#include "polariton/propagator.hpp"
#include "polariton/units.hpp"

namespace polariton {

Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();

  // Scale so the Taylor series converges quickly, then square back.
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXcd scaled = a / std::ldexp(1.0, squarings);

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k <= 60; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18 * sum.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Eigen::MatrixXcd expm_oracle(const Eigen::MatrixXcd& m, double t_fs) {
  if (t_fs < 0.0 || std::isnan(t_fs)) {
    throw Error(ErrorCode::NegativeTime, fmt::format("expm_oracle needs t >= 0, got {}", t_fs));
  }
  if (m.rows() > 65) {
    throw Error(ErrorCode::TooLarge, "expm_oracle is a dense check limited to N <= 64");
  }
  return matrix_exponential(-m * fs_to_inverse_wavenumber(t_fs));
}

Eigen::MatrixXcd expm_oracle(const DynamicsMatrix& m, double t_fs) {
  return expm_oracle(m.dense(), t_fs);
}

}  // namespace polariton
