#pragma once

#include <array>
#include <complex>
#include <vector>

#include "polariton/model.hpp"
#include "polariton/symmetric_matrix.hpp"

namespace polariton {

/// Franck-Condon weight exp(-lambda^2) lambda^(2m) / m!, evaluated in log space.
double franck_condon(double lambda, int m);

/// Complex line shift xi_m = m (omega_v + i Gamma).
inline cplx xi_shift(int m, double omega_v, double gamma_v) noexcept {
  return static_cast<double>(m) * cplx{omega_v, gamma_v};
}

/// Same-site commutator [b(t), b^dag(t')] of a damped vibrational mode:
/// exp(-(i w + G)(t - t')) for t >= t', exp((i w - G)(t' - t)) otherwise.
cplx mode_commutator(double t_fs, double tp_fs, double omega_v, double gamma_v) noexcept;

/// Smallest m_max with sum_{m > m_max} S_m < tail_eps.
int fc_truncation(double lambda, double tail_eps);

/// Sum of Franck-Condon weights above m_max, summed directly (no 1 - cdf).
double fc_tail(double lambda, int m_max);

/// Phonon-side constants shared by the signal kernels.
class VibKernel {
 public:
  /// Truncation chosen so the discarded Franck-Condon mass is below tail_eps;
  /// m_max >= 1 whenever lambda > 0.
  static VibKernel from_tail(double lambda, double omega_v, double gamma_v, double tail_eps = 1e-10);
  static VibKernel from_tail(const SystemParams& sys, double tail_eps = 1e-10);

  /// Fixed truncation order; tail_eps() then reports the mass actually dropped.
  static VibKernel with_order(double lambda, double omega_v, double gamma_v, int m_max);
  static VibKernel with_order(const SystemParams& sys, int m_max);

  double lambda() const noexcept { return lambda_; }
  double omega_v() const noexcept { return omega_v_; }
  double gamma_v() const noexcept { return gamma_v_; }
  int m_max() const noexcept { return m_max_; }
  double tail_eps() const noexcept { return tail_eps_; }

  /// S_m for 0 <= m <= m_max.
  double weight(int m) const noexcept { return weights_[static_cast<std::size_t>(m)]; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  cplx xi(int m) const noexcept { return xi_shift(m, omega_v_, gamma_v_); }

 private:
  VibKernel(double lambda, double omega_v, double gamma_v, int m_max, double tail_eps);

  double lambda_;
  double omega_v_;
  double gamma_v_;
  int m_max_;
  double tail_eps_;
  std::vector<double> weights_;
};

/// Operator string D_{s0}(t0) D^dag_{s1}(t1) D^dag_{s2}(t2) D_{s3}(t3), with
/// D_n = exp(lambda (b_n - b_n^dag)). In signal language the sites are
/// (j', j, l, i). Times in fs, sites are arbitrary integer labels.
struct TimeQuadruple {
  std::array<double, 4> times{};
  std::array<int, 4> sites{};
};

/// Vacuum expectation of the quadruple for any time ordering, from the
/// two-branch commutator.
cplx four_point_correlator(const TimeQuadruple& q, const VibKernel& kernel);

/// Same quantity with every exp(+-lambda^2 c) expanded as
/// e^{lambda^2} sum_m S_m (+-c)^m up to kernel.m_max(); this is the expansion
/// the signal kernels are built from.
cplx four_point_correlator_series(const TimeQuadruple& q, const VibKernel& kernel);

/// <0| D^dag_i(t) D_j(t') |0>.
cplx two_point_correlator(int site_i, double t_fs, int site_j, double tp_fs, const VibKernel& kernel);

struct FockCorrelatorResult {
  cplx value;
  double max_leakage = 0.0;        // weight in the top two Fock levels
  bool truncation_warning = false; // max_leakage > 1e-10
};

/// Undamped (Gamma = 0) brute-force evaluation on a truncated Fock space with
/// n_max levels per site. Distinct sites are independent tensor factors.
FockCorrelatorResult fock_oracle_correlator(const TimeQuadruple& q, double lambda, double omega_v,
                                            int n_max = 40);

}  // namespace polariton
