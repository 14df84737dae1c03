#include <cmath>

#include "polariton/parallel.hpp"
#include "polariton/signals.hpp"

namespace polariton {

double absorption_at(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                     double omega) {
  const double n = dec.n_molecules();
  const auto g0 = resolvent(dec, omega);
  cplx sum = kernel.weight(0) * (n * g0.diag + n * (n - 1.0) * g0.off);
  for (int m = 1; m <= kernel.m_max(); ++m) {
    const auto gm = resolvent(dec, omega - std::conj(kernel.xi(m)));
    sum += kernel.weight(m) * n * gm.diag;
  }
  return sys.dipole() * sys.dipole() * sum.real();
}

SpectrumGrid linear_absorption(const SystemParams& sys, const ModeDecomposition& dec,
                               const VibKernel& kernel, Axis axis, int workers) {
  axis = Axis::make(axis.start, axis.stop, axis.count, sys.axis_offset());
  SpectrumGrid out;
  out.axis1 = axis;
  out.values.assign(static_cast<std::size_t>(axis.count), {});
  parallel_chunks(axis.count, workers, [&](int begin, int end) {
    for (int k = begin; k < end; ++k) out.at(k) = absorption_at(sys, dec, kernel, axis.rotating(k));
  });
  out.metadata["quantity"] = "absorption";
  return out;
}

ModeLines mode_lines(const SystemParams& sys, const ModeDecomposition& dec) noexcept {
  const double off = sys.axis_offset();
  return {dec.lower().imag() + off, dec.upper().imag() + off, dec.dark().imag() + off};
}

PeakRatios peak_ratios(const SystemParams& sys, const ModeDecomposition& dec, int m_max) {
  const double n = dec.n_molecules();
  const double l2 = sys.lambda_hr() * sys.lambda_hr();
  const double g_lp = dec.lower().real();
  const double g_up = dec.upper().real();
  const double g_d = dec.dark().real();
  const double gv = sys.gamma_v();
  PeakRatios r;
  double fc = 1.0;  // lambda^{2m} / m!
  for (int m = 1; m <= m_max; ++m) {
    fc *= l2 / m;
    r.eds_over_lp.push_back(fc * (1.0 - 1.0 / n) * 2.0 * g_lp / (g_d + m * gv));
    r.eds_over_up.push_back(fc * (1.0 - 1.0 / n) * 2.0 * g_up / (g_d + m * gv));
    r.sideband_over_lp.push_back(fc / n * g_lp / (g_lp + m * gv));
    r.sideband_over_up.push_back(fc / n * g_up / (g_up + m * gv));
  }
  return r;
}

}  // namespace polariton
