#include <fmt/format.h>

#include <array>
#include <cmath>

#include "polariton/index_classes.hpp"
#include "polariton/parallel.hpp"
#include "polariton/signals.hpp"
#include "polariton/units.hpp"

namespace polariton {

namespace {

void check_waiting_time(double t_fs) {
  if (!(t_fs >= 0.0)) {
    throw Error(ErrorCode::NegativeWaitingTime, fmt::format("waiting time {} fs < 0", t_fs));
  }
}

// Pieces of the m-sums that depend only on Omega3 (row) or only on Omega1
// (column), for each of the four flag combinations that select them.
//   row:    B5[e2][e5](m6) = sum_m5 S z^m5 sum_m2 S A(m2 + m5 + m6)
//   column: B4[e1][e4](m6) = sum_m4 S z^m4 sum_m1 S C(m1 + m4 + m6)
// A(n) is the (i, l) resolvent entry at Omega3 + xi_n; C(n) is the (l, j')
// entry of conj(G(T) R(-Omega1 - conj(xi_n))).
struct Partial {
  // index 4 * diagonal_entry + 2 * inner_free + outer_free
  std::array<std::vector<cplx>, 8> b;

  const std::vector<cplx>& get(bool diagonal, bool inner, bool outer) const {
    return b[4 * diagonal + 2 * inner + outer];
  }
};

class TwodEvaluator {
 public:
  TwodEvaluator(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                double t_fs, const TwodOptions& opts)
      : dec_(dec), kernel_(kernel), m_(kernel.m_max()) {
    check_waiting_time(t_fs);
    g_ = propagator(dec, t_fs);
    const double theta = fs_to_inverse_wavenumber(t_fs);
    z_ = std::exp(cplx{-kernel.gamma_v(), kernel.omega_v()} * theta);
    const cplx alt = opts.drop_vibronic_parity ? z_ : -z_;
    alt_pow_.resize(static_cast<std::size_t>(m_) + 1);
    z_pow_.resize(static_cast<std::size_t>(m_) + 1);
    for (int k = 0; k <= m_; ++k) {
      alt_pow_[k] = kernel.weight(k) * std::pow(alt, k);
      z_pow_[k] = kernel.weight(k) * std::pow(z_, k);
    }
    psi_[0] = alt_pow_[0];
    psi_[1] = cplx{};
    for (int k = 0; k <= m_; ++k) psi_[1] += alt_pow_[k];
    prefactor_ = cplx{0.0, 1.0} * std::polar(1.0, sys.phase()) * std::pow(sys.dipole(), 4);
  }

  Partial row(double omega3) const {
    std::vector<cplx> diag(3 * m_ + 1), off(3 * m_ + 1);
    for (int n = 0; n <= 3 * m_; ++n) {
      const auto r = resolvent(dec_, omega3 + kernel_.xi(n));
      diag[n] = r.diag;
      off[n] = r.off;
    }
    return fold(diag, off);
  }

  Partial column(double omega1) const {
    std::vector<cplx> diag(3 * m_ + 1), off(3 * m_ + 1);
    for (int n = 0; n <= 3 * m_; ++n) {
      const auto p = (g_ * resolvent(dec_, -omega1 - std::conj(kernel_.xi(n)))).conj();
      diag[n] = p.diag;
      off[n] = p.off;
    }
    return fold(diag, off);
  }

  cplx combine(const Partial& row, const Partial& col) const {
    const double n = dec_.n_molecules();
    cplx total{};
    for (const auto& cls : index_classes()) {
      const double mult = cls.multiplicity(static_cast<int>(n));
      if (mult == 0.0) continue;
      const auto e = cls.pair_equal();
      const auto& b5 = row.get(e[1], e[1], e[4]);
      const auto& b4 = col.get(e[3], e[0], e[3]);
      const int m6 = e[5] ? m_ : 0;
      cplx s{};
      for (int k = 0; k <= m6; ++k) s += alt_pow_[k] * b5[k] * b4[k];
      total += mult * g_.molecule(e[2]) * psi_[e[2]] * s;
    }
    return prefactor_ * total;
  }

 private:
  Partial fold(const std::vector<cplx>& diag, const std::vector<cplx>& off) const {
    Partial out;
    std::vector<cplx> tilde(2 * m_ + 1);
    for (int d = 0; d < 2; ++d) {
      const auto& a = d ? diag : off;
      for (int in = 0; in < 2; ++in) {
        const int inner = in ? m_ : 0;
        for (int k = 0; k <= 2 * m_; ++k) {
          tilde[k] = cplx{};
          for (int q = 0; q <= inner; ++q) tilde[k] += kernel_.weight(q) * a[q + k];
        }
        for (int o = 0; o < 2; ++o) {
          const int outer = o ? m_ : 0;
          auto& b = out.b[4 * d + 2 * in + o];
          b.assign(static_cast<std::size_t>(m_) + 1, cplx{});
          for (int m6 = 0; m6 <= m_; ++m6)
            for (int q = 0; q <= outer; ++q) b[m6] += z_pow_[q] * tilde[q + m6];
        }
      }
    }
    return out;
  }

  const ModeDecomposition& dec_;
  const VibKernel& kernel_;
  int m_;
  MoleculeSymmetricMatrix g_;
  cplx z_;
  std::vector<cplx> alt_pow_;  // S_k (-z)^k
  std::vector<cplx> z_pow_;    // S_k z^k
  std::array<cplx, 2> psi_{};  // sum over m3, pinned or free
  cplx prefactor_;
};

}  // namespace

cplx twod_signal_point(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                       double omega1, double omega3, double t_fs, const TwodOptions& opts) {
  const TwodEvaluator ev(sys, dec, kernel, t_fs, opts);
  return ev.combine(ev.row(omega3), ev.column(omega1));
}

SpectrumGrid twod_signal(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                         Axis omega1, Axis omega3, double t_fs, const TwodOptions& opts) {
  omega1 = Axis::make(omega1.start, omega1.stop, omega1.count, sys.axis_offset());
  omega3 = Axis::make(omega3.start, omega3.stop, omega3.count, sys.axis_offset());
  const TwodEvaluator ev(sys, dec, kernel, t_fs, opts);

  std::vector<Partial> rows(static_cast<std::size_t>(omega3.count));
  std::vector<Partial> cols(static_cast<std::size_t>(omega1.count));
  parallel_chunks(omega3.count, opts.workers, [&](int b, int e) {
    for (int k = b; k < e; ++k) rows[k] = ev.row(omega3.rotating(k));
  });
  parallel_chunks(omega1.count, opts.workers, [&](int b, int e) {
    for (int k = b; k < e; ++k) cols[k] = ev.column(-omega1.rotating(k));
  });

  SpectrumGrid out;
  out.axis1 = omega1;
  out.axis2 = omega3;
  out.waiting_time = t_fs;
  out.values.assign(static_cast<std::size_t>(omega1.count) * omega3.count, {});
  parallel_chunks(omega1.count, opts.workers, [&](int b, int e) {
    for (int r = b; r < e; ++r)
      for (int c = 0; c < omega3.count; ++c) out.at(r, c) = ev.combine(rows[c], cols[r]);
  });
  out.metadata["quantity"] = "twod";
  out.metadata["omega1_convention"] = "rephasing; formula Omega1 = -(omega1 - offset)";
  return out;
}

cplx twod_signal_direct(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                        double omega1, double omega3, double t_fs) {
  const int n = dec.n_molecules();
  if (n > 6) throw Error(ErrorCode::TooLarge, fmt::format("direct 2D loop limited to N <= 6, got {}", n));
  check_waiting_time(t_fs);
  const int mm = kernel.m_max();
  const double theta = fs_to_inverse_wavenumber(t_fs);
  const Eigen::MatrixXcd g = propagator_G(dec, t_fs);
  std::vector<Eigen::MatrixXcd> fwd, bwd;
  for (int k = 0; k <= 3 * mm; ++k) {
    fwd.push_back(propagator_fourier(dec, omega3 + kernel.xi(k)));
    bwd.push_back(propagator_fourier(dec, -omega1 - std::conj(kernel.xi(k))));
  }
  const auto top = [mm](int a, int b) { return a == b ? mm : 0; };
  const cplx iu{0.0, 1.0};

  cplx total{};
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j)
        for (int jp = 0; jp < n; ++jp)
          for (int m1 = 0; m1 <= top(jp, j); ++m1)
            for (int m2 = 0; m2 <= top(i, l); ++m2)
              for (int m3 = 0; m3 <= top(j, l); ++m3)
                for (int m4 = 0; m4 <= top(jp, l); ++m4)
                  for (int m5 = 0; m5 <= top(i, j); ++m5)
                    for (int m6 = 0; m6 <= top(i, jp); ++m6) {
                      const double w = kernel.weight(m1) * kernel.weight(m2) * kernel.weight(m3) *
                                       kernel.weight(m4) * kernel.weight(m5) * kernel.weight(m6) *
                                       ((m3 + m6) % 2 == 0 ? 1.0 : -1.0);
                      const cplx a = fwd[m2 + m5 + m6](i, l);
                      const cplx ph = std::exp(iu * kernel.xi(m3 + m4 + m5 + m6) * theta);
                      const auto& b = bwd[m1 + m4 + m6];
                      for (int p = 0; p <= n; ++p) {
                        total += w * a * std::conj(g(l, p)) * g(l, j) * ph * std::conj(b(p, jp));
                      }
                    }
  return iu * std::polar(1.0, sys.phase()) * std::pow(sys.dipole(), 4) * total;
}

}  // namespace polariton
