#include "polariton/vibrations.hpp"

#include <fmt/format.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "polariton/units.hpp"

namespace polariton {

double franck_condon(double lambda, int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "Franck-Condon order must be >= 0");
  if (lambda < 0.0) throw Error(ErrorCode::InvalidArgument, "lambda must be >= 0");
  if (lambda == 0.0) return m == 0 ? 1.0 : 0.0;
  const double l2 = lambda * lambda;
  return std::exp(-l2 + 2.0 * m * std::log(lambda) - std::lgamma(m + 1.0));
}

cplx mode_commutator(double t_fs, double tp_fs, double omega_v, double gamma_v) noexcept {
  const double dt = t_fs - tp_fs;
  if (dt >= 0.0) return std::exp(-cplx{gamma_v, omega_v} * fs_to_inverse_wavenumber(dt));
  return std::exp(cplx{-gamma_v, omega_v} * fs_to_inverse_wavenumber(-dt));
}

double fc_tail(double lambda, int m_max) {
  if (lambda == 0.0) return 0.0;
  const double mode = lambda * lambda;
  double sum = 0.0;
  for (int m = m_max + 1;; ++m) {
    const double s = franck_condon(lambda, m);
    sum += s;
    if (m > mode && (s == 0.0 || s < 1e-18 * sum)) break;
  }
  return sum;
}

int fc_truncation(double lambda, double tail_eps) {
  if (!(tail_eps > 0.0 && tail_eps < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "tail_eps must lie in (0, 1)");
  }
  if (lambda < 0.0) throw Error(ErrorCode::InvalidArgument, "lambda must be >= 0");
  int m = 0;
  while (fc_tail(lambda, m) >= tail_eps) ++m;
  return m;
}

VibKernel::VibKernel(double lambda, double omega_v, double gamma_v, int m_max, double tail_eps)
    : lambda_(lambda), omega_v_(omega_v), gamma_v_(gamma_v), m_max_(m_max), tail_eps_(tail_eps) {
  weights_.reserve(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) weights_.push_back(franck_condon(lambda, m));
}

VibKernel VibKernel::from_tail(double lambda, double omega_v, double gamma_v, double tail_eps) {
  int m_max = fc_truncation(lambda, tail_eps);
  if (lambda > 0.0) m_max = std::max(m_max, 1);
  return VibKernel(lambda, omega_v, gamma_v, m_max, tail_eps);
}

VibKernel VibKernel::from_tail(const SystemParams& sys, double tail_eps) {
  return from_tail(sys.lambda_hr(), sys.omega_v(), sys.gamma_v(), tail_eps);
}

VibKernel VibKernel::with_order(double lambda, double omega_v, double gamma_v, int m_max) {
  if (m_max < 0) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 0");
  if (lambda < 0.0) throw Error(ErrorCode::InvalidArgument, "lambda must be >= 0");
  return VibKernel(lambda, omega_v, gamma_v, m_max, fc_tail(lambda, m_max));
}

VibKernel VibKernel::with_order(const SystemParams& sys, int m_max) {
  return with_order(sys.lambda_hr(), sys.omega_v(), sys.gamma_v(), m_max);
}

namespace {

// The six commutator pairs in the exponent, with their signs.
struct Pair {
  int left;
  int right;
  double sign;
};
constexpr std::array<Pair, 6> kPairs{{
    {0, 1, +1.0},  // [b_j'(t),    b_j^dag(t')]
    {2, 3, +1.0},  // [b_l(t''),   b_i^dag(t''')]
    {1, 2, -1.0},  // [b_j(t'),    b_l^dag(t'')]
    {0, 2, +1.0},  // [b_j'(t),    b_l^dag(t'')]
    {1, 3, +1.0},  // [b_j(t'),    b_i^dag(t''')]
    {0, 3, -1.0},  // [b_j'(t),    b_i^dag(t''')]
}};

cplx pair_commutator(const TimeQuadruple& q, const Pair& p, const VibKernel& k) {
  if (q.sites[p.left] != q.sites[p.right]) return {};
  return mode_commutator(q.times[p.left], q.times[p.right], k.omega_v(), k.gamma_v());
}

}  // namespace

cplx four_point_correlator(const TimeQuadruple& q, const VibKernel& kernel) {
  const double l2 = kernel.lambda() * kernel.lambda();
  cplx exponent{};
  for (const auto& p : kPairs) exponent += p.sign * pair_commutator(q, p, kernel);
  return std::exp(-2.0 * l2 + l2 * exponent);
}

cplx four_point_correlator_series(const TimeQuadruple& q, const VibKernel& kernel) {
  const double l2 = kernel.lambda() * kernel.lambda();
  cplx product{1.0, 0.0};
  for (const auto& p : kPairs) {
    const cplx c = p.sign * pair_commutator(q, p, kernel);
    // delta^0 = 1 even across distinct sites, delta^{m>=1} kills the rest.
    cplx sum{};
    cplx power{1.0, 0.0};
    const int top = q.sites[p.left] == q.sites[p.right] ? kernel.m_max() : 0;
    for (int m = 0; m <= top; ++m) {
      sum += kernel.weight(m) * power;
      power *= c;
    }
    product *= std::exp(l2) * sum;
  }
  return std::exp(-2.0 * l2) * product;
}

cplx two_point_correlator(int site_i, double t_fs, int site_j, double tp_fs,
                          const VibKernel& kernel) {
  const double l2 = kernel.lambda() * kernel.lambda();
  if (site_i != site_j) return std::exp(-l2);
  return std::exp(-l2 + l2 * mode_commutator(t_fs, tp_fs, kernel.omega_v(), kernel.gamma_v()));
}

namespace {

struct FockSpace {
  int n_max;
  Eigen::MatrixXcd annihilation;

  explicit FockSpace(int n) : n_max(n), annihilation(Eigen::MatrixXcd::Zero(n, n)) {
    for (int k = 1; k < n; ++k) annihilation(k - 1, k) = std::sqrt(static_cast<double>(k));
  }

  // exp(s lambda (b e^{-i phi} - b^dag e^{i phi})); anti-Hermitian generator,
  // exponentiated through the Hermitian eigenproblem of -i A.
  Eigen::MatrixXcd displacement(double signed_lambda, double phi) const {
    const cplx phase = std::polar(1.0, -phi);
    const Eigen::MatrixXcd gen =
        signed_lambda * (annihilation * phase - annihilation.adjoint() * std::conj(phase));
    const Eigen::MatrixXcd herm = cplx{0.0, -1.0} * gen;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (herm + herm.adjoint()));
    Eigen::VectorXcd phases(n_max);
    for (int k = 0; k < n_max; ++k) phases(k) = std::polar(1.0, es.eigenvalues()(k));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }

  double leakage(const Eigen::VectorXcd& psi) const {
    return std::norm(psi(n_max - 1)) + std::norm(psi(n_max - 2));
  }
};

}  // namespace

FockCorrelatorResult fock_oracle_correlator(const TimeQuadruple& q, double lambda, double omega_v,
                                            int n_max) {
  if (n_max < 30) throw Error(ErrorCode::InvalidArgument, "Fock oracle needs n_max >= 30");
  const FockSpace fock(n_max);
  // Operator k is D (sign +1) for k = 0, 3 and D^dag (sign -1) for k = 1, 2.
  constexpr std::array<double, 4> kSign{+1.0, -1.0, -1.0, +1.0};

  std::map<int, std::vector<int>> by_site;
  for (int k = 0; k < 4; ++k) by_site[q.sites[k]].push_back(k);

  FockCorrelatorResult result{cplx{1.0, 0.0}};
  Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(n_max);
  vacuum(0) = 1.0;

  for (const auto& [site, ops] : by_site) {
    (void)site;
    std::vector<Eigen::MatrixXcd> mats;
    for (int k : ops) {
      const double phi = omega_v * fs_to_inverse_wavenumber(q.times[k]);
      mats.push_back(fock.displacement(kSign[k] * lambda, phi));
    }
    // <0| X_1 .. X_h  X_{h+1} .. X_n |0>: build both halves from the vacuum so
    // no intermediate state carries more than two displacements.
    const std::size_t h = mats.size() / 2;
    Eigen::VectorXcd right = vacuum;
    for (std::size_t k = mats.size(); k-- > h;) {
      right = mats[k] * right;
      result.max_leakage = std::max(result.max_leakage, fock.leakage(right));
    }
    Eigen::VectorXcd left = vacuum;
    for (std::size_t k = 0; k < h; ++k) {
      left = mats[k].adjoint() * left;
      result.max_leakage = std::max(result.max_leakage, fock.leakage(left));
    }
    result.value *= left.dot(right);
  }
  result.truncation_warning = result.max_leakage > 1e-10;
  return result;
}

}  // namespace polariton
