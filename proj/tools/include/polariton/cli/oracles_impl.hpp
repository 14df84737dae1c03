#pragma once

#include <cmath>

#include "polariton/units.hpp"

namespace polariton::cli {

template <typename Pred>
double pump_probe_mode_term(const ModeDecomposition& dec, const VibKernel& kernel, double omega,
                            double t_fs, int order, Pred include) {
  const int n = dec.n_molecules();
  const Eigen::MatrixXcd t = dec.transform();
  const Eigen::MatrixXcd ti = dec.inverse_transform();
  const Eigen::MatrixXcd g = propagator_G(dec, t_fs);
  const double theta = fs_to_inverse_wavenumber(t_fs);
  const cplx iu{0.0, 1.0};

  // Restricted resolvent for the one shift that appears.
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    if (!include(k)) continue;
    const cplx den = dec.eigenvalue(k) - iu * (omega + kernel.xi(order));
    r += t.col(k) * ti.row(k) / den;
  }
  const auto d = [](int a, int b) { return a == b ? 1 : 0; };
  const auto pw = [](int x, int m) { return m == 0 ? 1.0 : std::pow(static_cast<double>(x), m); };

  double total = 0.0;
  for (int m1 = 0; m1 <= order; ++m1) {
    const int m3 = order - m1;
    if (m1 > kernel.m_max() || m3 > kernel.m_max()) continue;
    for (int m2 = 0; m2 <= kernel.m_max(); ++m2)
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
          for (int j = 0; j < n; ++j)
            for (int jp = 0; jp < n; ++jp) {
              const double w = kernel.weight(m1) * kernel.weight(m2) * kernel.weight(m3) *
                               pw(d(i, l), m1) * pw(d(jp, l) - d(j, l), m2) * pw(d(i, j) - d(i, jp), m3);
              if (w == 0.0) continue;
              total += w * (r(i, l) * std::conj(g(l, jp)) * g(l, j) *
                            std::exp(iu * kernel.xi(m2 + m3) * theta))
                               .real();
            }
  }
  return total;
}

}  // namespace polariton::cli
