#include "polariton/propagator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polariton/units.hpp"

namespace polariton {

DynamicsMatrix::DynamicsMatrix(int n_molecules, cplx molecule_diag, cplx photon_diag, double g)
    : n_(n_molecules), a_(molecule_diag), c_(photon_diag), g_(g) {
  if (n_molecules < 1) {
    throw Error(ErrorCode::NegativeCount, "dynamics matrix needs at least one molecule");
  }
}

cplx DynamicsMatrix::at(int row, int col) const noexcept {
  if (row == n_ && col == n_) return c_;
  if (row == n_ || col == n_) return coupling();
  return row == col ? a_ : cplx{};
}

Eigen::MatrixXcd DynamicsMatrix::dense() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_ + 1, n_ + 1);
  for (int l = 0; l < n_; ++l) {
    m(l, l) = a_;
    m(l, n_) = coupling();
    m(n_, l) = coupling();
  }
  m(n_, n_) = c_;
  return m;
}

DynamicsMatrix build_matrix(const SystemParams& sys) {
  return DynamicsMatrix(sys.n_molecules(), cplx{sys.gamma_x(), sys.delta_x()},
                        cplx{sys.gamma_c(), sys.delta_c()}, sys.g());
}

std::string ModeLabel::name() const {
  switch (kind) {
    case ModeKind::LowerPolariton: return "LP";
    case ModeKind::UpperPolariton: return "UP";
    case ModeKind::Dark: return fmt::format("D{}", dark_index);
  }
  return "?";
}

namespace {

// Right eigenvector of [[a, iG],[iG, c]] for eigenvalue mu, unit Euclidean
// norm, phase fixed so the molecular component is real and non-negative.
Eigen::Vector2cd bright_eigenvector(cplx a, cplx c, cplx ig, cplx mu) {
  Eigen::Vector2cd from_top(ig, mu - a);
  Eigen::Vector2cd from_bottom(mu - c, ig);
  Eigen::Vector2cd v = from_top.norm() >= from_bottom.norm() ? from_top : from_bottom;
  v /= v.norm();
  const cplx pivot = std::abs(v(0)) > 1e-14 ? v(0) : v(1);
  v *= std::conj(pivot) / std::abs(pivot);
  return v;
}

}  // namespace

ModeDecomposition decompose(const DynamicsMatrix& m) {
  const int n = m.n_molecules();
  const cplx a = m.molecule_diag();
  const cplx c = m.photon_diag();
  const double gn = m.g() * std::sqrt(static_cast<double>(n));
  const cplx ig{0.0, gn};

  const cplx mean = 0.5 * (a + c);
  const cplx half = 0.5 * (a - c);
  const cplx root = std::sqrt(half * half - gn * gn);
  cplx mu_minus = mean - root;
  cplx mu_plus = mean + root;

  const double scale = std::max({1.0, std::abs(a), std::abs(c), gn});
  if (std::abs(mu_plus - mu_minus) <= 1e-12 * scale) {
    throw Error(ErrorCode::DegenerateBright,
                fmt::format("bright eigenvalues coincide at {}{:+}i", mean.real(), mean.imag()));
  }

  // Lower polariton = lower frequency (imaginary part); ties by decay rate.
  auto lower_first = [](cplx x, cplx y) {
    if (x.imag() != y.imag()) return x.imag() < y.imag();
    return x.real() < y.real();
  };
  if (!lower_first(mu_minus, mu_plus)) std::swap(mu_minus, mu_plus);

  ModeDecomposition d;
  d.n_ = n;
  d.mu_lp_ = mu_minus;
  d.mu_up_ = mu_plus;
  d.mu_dark_ = a;
  d.v_.col(0) = bright_eigenvector(a, c, ig, mu_minus);
  d.v_.col(1) = bright_eigenvector(a, c, ig, mu_plus);

  const cplx det = d.v_(0, 0) * d.v_(1, 1) - d.v_(0, 1) * d.v_(1, 0);
  d.v_inv_ << d.v_(1, 1), -d.v_(0, 1), -d.v_(1, 0), d.v_(0, 0);
  d.v_inv_ /= det;
  return d;
}

cplx ModeDecomposition::eigenvalue(int k) const noexcept {
  if (k == 0) return mu_lp_;
  if (k == 1) return mu_up_;
  return mu_dark_;
}

ModeLabel ModeDecomposition::label(int k) const noexcept {
  if (k == 0) return {ModeKind::LowerPolariton, 0};
  if (k == 1) return {ModeKind::UpperPolariton, 0};
  return {ModeKind::Dark, k - 1};
}

double ModeDecomposition::min_decay() const noexcept {
  double m = std::min(mu_lp_.real(), mu_up_.real());
  if (n_ > 1) m = std::min(m, mu_dark_.real());
  return m;
}

namespace {

cplx dark_component(int site, int q, int n) noexcept {
  // site is 0-based here; the Fourier convention counts sites from 1.
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(site + 1) * q / n;
  return std::polar(1.0 / std::sqrt(static_cast<double>(n)), angle);
}

}  // namespace

cplx ModeDecomposition::t(int row, int k) const noexcept {
  const double rn = 1.0 / std::sqrt(static_cast<double>(n_));
  if (k < 2) return row == n_ ? v_(1, k) : v_(0, k) * rn;
  if (row == n_) return {};
  return dark_component(row, k - 1, n_);
}

cplx ModeDecomposition::t_inv(int k, int col) const noexcept {
  const double rn = 1.0 / std::sqrt(static_cast<double>(n_));
  if (k < 2) return col == n_ ? v_inv_(k, 1) : v_inv_(k, 0) * rn;
  if (col == n_) return {};
  return std::conj(dark_component(col, k - 1, n_));
}

Eigen::MatrixXcd ModeDecomposition::transform() const {
  Eigen::MatrixXcd m(n_ + 1, n_ + 1);
  for (int r = 0; r <= n_; ++r)
    for (int k = 0; k <= n_; ++k) m(r, k) = t(r, k);
  return m;
}

Eigen::MatrixXcd ModeDecomposition::inverse_transform() const {
  Eigen::MatrixXcd m(n_ + 1, n_ + 1);
  for (int k = 0; k <= n_; ++k)
    for (int c = 0; c <= n_; ++c) m(k, c) = t_inv(k, c);
  return m;
}

Eigen::VectorXcd ModeDecomposition::eigenvalues() const {
  Eigen::VectorXcd mu(n_ + 1);
  for (int k = 0; k <= n_; ++k) mu(k) = eigenvalue(k);
  return mu;
}

MoleculeSymmetricMatrix ModeDecomposition::apply(cplx f_lower, cplx f_upper,
                                                  cplx f_dark) const noexcept {
  // Bright block V diag(f) V^-1 in the (uniform molecule, photon) basis.
  const cplx b00 = v_(0, 0) * f_lower * v_inv_(0, 0) + v_(0, 1) * f_upper * v_inv_(1, 0);
  const cplx b01 = v_(0, 0) * f_lower * v_inv_(0, 1) + v_(0, 1) * f_upper * v_inv_(1, 1);
  const cplx b10 = v_(1, 0) * f_lower * v_inv_(0, 0) + v_(1, 1) * f_upper * v_inv_(1, 0);
  const cplx b11 = v_(1, 0) * f_lower * v_inv_(0, 1) + v_(1, 1) * f_upper * v_inv_(1, 1);

  const double n = n_;
  const double rn = 1.0 / std::sqrt(n);
  MoleculeSymmetricMatrix out;
  out.n = n_;
  // Dark modes span the complement of the uniform state: f_dark (I - u u^T).
  out.diag = f_dark * (1.0 - 1.0 / n) + b00 / n;
  out.off = (b00 - f_dark) / n;
  out.mol_photon = b01 * rn;
  out.photon_mol = b10 * rn;
  out.photon = b11;
  return out;
}

MoleculeSymmetricMatrix propagator(const ModeDecomposition& dec, double t_fs) {
  if (t_fs < 0.0 || std::isnan(t_fs)) {
    throw Error(ErrorCode::NegativeTime, fmt::format("propagator needs t >= 0, got {}", t_fs));
  }
  const double theta = fs_to_inverse_wavenumber(t_fs);
  return dec.map([theta](cplx mu) { return std::exp(-mu * theta); });
}

Eigen::MatrixXcd propagator_G(const ModeDecomposition& dec, double t_fs) {
  if (t_fs < 0.0 || std::isnan(t_fs)) {
    throw Error(ErrorCode::NegativeTime, fmt::format("propagator needs t >= 0, got {}", t_fs));
  }
  const double theta = fs_to_inverse_wavenumber(t_fs);
  Eigen::VectorXcd f(dec.dimension());
  for (int k = 0; k < dec.dimension(); ++k) f(k) = std::exp(-dec.eigenvalue(k) * theta);
  return dec.transform() * f.asDiagonal() * dec.inverse_transform();
}

namespace {

void check_convergent(const ModeDecomposition& dec, cplx omega) {
  if (!(omega.imag() > -dec.min_decay())) {
    throw Error(ErrorCode::DivergentTransform,
                fmt::format("half-line transform diverges: Im(Omega) = {} <= -{}", omega.imag(),
                            dec.min_decay()));
  }
}

}  // namespace

MoleculeSymmetricMatrix resolvent(const ModeDecomposition& dec, cplx omega) {
  check_convergent(dec, omega);
  const cplx iw = cplx{0.0, 1.0} * omega;
  return dec.map([iw](cplx mu) { return 1.0 / (mu - iw); });
}

Eigen::MatrixXcd propagator_fourier(const ModeDecomposition& dec, cplx omega) {
  check_convergent(dec, omega);
  const cplx iw = cplx{0.0, 1.0} * omega;
  Eigen::VectorXcd f(dec.dimension());
  for (int k = 0; k < dec.dimension(); ++k) f(k) = 1.0 / (dec.eigenvalue(k) - iw);
  return dec.transform() * f.asDiagonal() * dec.inverse_transform();
}

}  // namespace polariton
