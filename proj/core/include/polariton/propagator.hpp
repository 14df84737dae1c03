#pragma once

#include <array>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "polariton/model.hpp"
#include "polariton/symmetric_matrix.hpp"

namespace polariton {

/// Complex symmetric arrowhead generator of the linear Langevin dynamics,
/// dV/dt = -M V, in the basis (molecule 1..N, photon). The exciton-vibration
/// dressing of the coupling is taken at leading order (g sigma^z D^dag ~ g).
class DynamicsMatrix {
 public:
  DynamicsMatrix(int n_molecules, cplx molecule_diag, cplx photon_diag, double g);

  int n_molecules() const noexcept { return n_; }
  int dimension() const noexcept { return n_ + 1; }
  cplx molecule_diag() const noexcept { return a_; }
  cplx photon_diag() const noexcept { return c_; }
  double g() const noexcept { return g_; }
  cplx coupling() const noexcept { return {0.0, g_}; }

  cplx at(int row, int col) const noexcept;
  cplx trace() const noexcept { return static_cast<double>(n_) * a_ + c_; }
  Eigen::MatrixXcd dense() const;

 private:
  int n_;
  cplx a_;
  cplx c_;
  double g_;
};

DynamicsMatrix build_matrix(const SystemParams& sys);

enum class ModeKind { LowerPolariton, UpperPolariton, Dark };

struct ModeLabel {
  ModeKind kind;
  int dark_index = 0;  // 1..N-1 for dark modes (Fourier index), 0 otherwise

  std::string name() const;
};

/// Closed-form eigendecomposition M = T diag(mu) T^-1 of the identical-molecule
/// arrowhead matrix. Mode order: 0 = LP, 1 = UP, 2..N = dark modes with
/// Fourier index q = k - 1, T_{s,q} = exp(-2 pi i s q / N) / sqrt(N), s = 1..N.
///
/// T is stored as the 2x2 bright block (components along the uniform
/// molecular state and the photon) plus the implicit unitary dark block.
class ModeDecomposition {
 public:
  int n_molecules() const noexcept { return n_; }
  int dimension() const noexcept { return n_ + 1; }

  cplx eigenvalue(int k) const noexcept;
  ModeLabel label(int k) const noexcept;
  cplx lower() const noexcept { return mu_lp_; }
  cplx upper() const noexcept { return mu_up_; }
  cplx dark() const noexcept { return mu_dark_; }

  /// Smallest decay rate Re(mu_k) over the modes that exist.
  double min_decay() const noexcept;

  /// Structured element access, row/col as in DynamicsMatrix (photon = N).
  cplx t(int row, int k) const noexcept;
  cplx t_inv(int k, int col) const noexcept;

  Eigen::MatrixXcd transform() const;
  Eigen::MatrixXcd inverse_transform() const;
  Eigen::VectorXcd eigenvalues() const;

  /// f(M) = T diag(f(mu_k)) T^-1 from the three distinct mode values.
  MoleculeSymmetricMatrix apply(cplx f_lower, cplx f_upper, cplx f_dark) const noexcept;

  template <typename F>
  MoleculeSymmetricMatrix map(F&& f) const {
    return apply(f(mu_lp_), f(mu_up_), f(mu_dark_));
  }

  /// Columns: (molecular-uniform component, photon component) of LP and UP.
  const Eigen::Matrix2cd& bright_vectors() const noexcept { return v_; }
  const Eigen::Matrix2cd& bright_inverse() const noexcept { return v_inv_; }

 private:
  friend ModeDecomposition decompose(const DynamicsMatrix& m);
  ModeDecomposition() = default;

  int n_ = 1;
  cplx mu_lp_{};
  cplx mu_up_{};
  cplx mu_dark_{};
  Eigen::Matrix2cd v_;
  Eigen::Matrix2cd v_inv_;
};

/// Throws Error(DegenerateBright) when the two bright eigenvalues coincide.
ModeDecomposition decompose(const DynamicsMatrix& m);

/// G(t) = T diag(exp(-mu_k theta(t))) T^-1 with theta(t) = 2 pi c t.
/// Throws Error(NegativeTime) for t < 0.
MoleculeSymmetricMatrix propagator(const ModeDecomposition& dec, double t_fs);
Eigen::MatrixXcd propagator_G(const ModeDecomposition& dec, double t_fs);

/// Half-line transform  int_0^inf G(theta) exp(i Omega theta) dtheta
/// = T diag(1/(mu_k - i Omega)) T^-1, Omega in cm^-1.
/// Throws Error(DivergentTransform) unless Im(Omega) > -min_k Re(mu_k).
MoleculeSymmetricMatrix resolvent(const ModeDecomposition& dec, cplx omega);
Eigen::MatrixXcd propagator_fourier(const ModeDecomposition& dec, cplx omega);

/// Dense exp(-M theta(t)) by scaling and squaring of a Taylor series. Used as
/// an independent check of the closed-form decomposition.
Eigen::MatrixXcd expm_oracle(const DynamicsMatrix& m, double t_fs);
Eigen::MatrixXcd expm_oracle(const Eigen::MatrixXcd& m, double t_fs);

/// exp(A) for a dense complex matrix.
Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& a);

}  // namespace polariton
