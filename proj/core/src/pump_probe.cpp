#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

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

cplx vib_phase(const VibKernel& kernel, double t_fs) {
  return std::exp(cplx{-kernel.gamma_v(), kernel.omega_v()} * fs_to_inverse_wavenumber(t_fs));
}

// x^m with 0^0 = 1 for the signed Kronecker differences.
double signed_power(int x, int m) noexcept {
  if (m == 0) return 1.0;
  if (x == 0) return 0.0;
  return (x < 0 && m % 2 == 1) ? -1.0 : 1.0;
}

}  // namespace

double pump_probe_at(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                     double omega, double t_fs) {
  check_waiting_time(t_fs);
  const int mm = kernel.m_max();
  const int n = dec.n_molecules();
  const auto g = propagator(dec, t_fs);
  const cplx z = vib_phase(kernel, t_fs);

  std::vector<MoleculeSymmetricMatrix> r;
  for (int k = 0; k <= 2 * mm; ++k) r.push_back(resolvent(dec, omega + kernel.xi(k)));

  cplx total{};
  for (const auto& cls : index_classes()) {
    const double mult = cls.multiplicity(n);
    if (mult == 0.0) continue;
    const bool il = cls.same(kPosI, kPosL);
    const int s2 = int(cls.same(kPosJp, kPosL)) - int(cls.same(kPosJ, kPosL));
    const int s3 = int(cls.same(kPosI, kPosJ)) - int(cls.same(kPosI, kPosJp));
    const int top1 = il ? mm : 0;
    const int top2 = s2 != 0 ? mm : 0;
    const int top3 = s3 != 0 ? mm : 0;

    cplx outer{};
    for (int m1 = 0; m1 <= top1; ++m1)
      for (int m3 = 0; m3 <= top3; ++m3)
        outer += kernel.weight(m1) * kernel.weight(m3) * signed_power(s3, m3) * std::pow(z, m3) *
                 r[m1 + m3].molecule(il);
    cplx middle{};
    for (int m2 = 0; m2 <= top2; ++m2)
      middle += kernel.weight(m2) * signed_power(s2, m2) * std::pow(z, m2);

    const cplx gg = std::conj(g.molecule(cls.same(kPosL, kPosJp))) * g.molecule(cls.same(kPosL, kPosJ));
    total += mult * outer * middle * gg;
  }
  return std::pow(sys.dipole(), 4) * total.real();
}

double pump_probe_direct(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                         double omega, double t_fs) {
  const int n = dec.n_molecules();
  if (n > 12) {
    throw Error(ErrorCode::TooLarge, fmt::format("direct pump-probe loop limited to N <= 12, got {}", n));
  }
  check_waiting_time(t_fs);
  const int mm = kernel.m_max();
  const double theta = fs_to_inverse_wavenumber(t_fs);
  const Eigen::MatrixXcd g = propagator_G(dec, t_fs);
  std::vector<Eigen::MatrixXcd> r;
  for (int k = 0; k <= 2 * mm; ++k) r.push_back(propagator_fourier(dec, omega + kernel.xi(k)));
  const auto d = [](int a, int b) { return a == b ? 1 : 0; };
  const cplx iu{0.0, 1.0};

  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j)
        for (int jp = 0; jp < n; ++jp)
          for (int m1 = 0; m1 <= mm; ++m1)
            for (int m2 = 0; m2 <= mm; ++m2)
              for (int m3 = 0; m3 <= mm; ++m3) {
                const double w = kernel.weight(m1) * kernel.weight(m2) * kernel.weight(m3) *
                                 signed_power(d(i, l), m1) * signed_power(d(jp, l) - d(j, l), m2) *
                                 signed_power(d(i, j) - d(i, jp), m3);
                if (w == 0.0) continue;
                const cplx term = r[m1 + m3](i, l) * std::conj(g(l, jp)) * g(l, j) *
                                  std::exp(iu * kernel.xi(m2 + m3) * theta);
                total += w * term.real();
              }
  return std::pow(sys.dipole(), 4) * total;
}

SpectrumGrid pump_probe(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                        Axis axis, double t_fs, int workers) {
  check_waiting_time(t_fs);
  axis = Axis::make(axis.start, axis.stop, axis.count, sys.axis_offset());
  SpectrumGrid out;
  out.axis1 = axis;
  out.waiting_time = t_fs;
  out.values.assign(static_cast<std::size_t>(axis.count), {});
  parallel_chunks(axis.count, workers, [&](int begin, int end) {
    for (int k = begin; k < end; ++k) out.at(k) = pump_probe_at(sys, dec, kernel, axis.rotating(k), t_fs);
  });
  out.metadata["quantity"] = "pump-probe";
  return out;
}

double slice_upper_formula(const ModeDecomposition& dec, const VibKernel& kernel, double t_fs) {
  check_waiting_time(t_fs);
  const int n = dec.n_molecules();
  const auto g = propagator(dec, t_fs);
  const cplx z = vib_phase(kernel, t_fs);
  const auto d = [](int a, int b) { return a == b ? 1 : 0; };
  double sum = 0.0;
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int jp = 0; jp < n; ++jp) {
        const cplx gg = std::conj(g.molecule(l == jp)) * g.molecule(l == j);
        for (int m = 0; m <= kernel.m_max(); ++m) {
          const double w = kernel.weight(m) * signed_power(d(jp, l) - d(j, l), m);
          if (w != 0.0) sum += w * (gg * std::pow(z, m)).real();
        }
      }
  const double l2 = kernel.lambda() * kernel.lambda();
  return std::exp(-l2) / (2.0 * dec.upper().real()) * sum;
}

double slice_dark_formula(const ModeDecomposition& dec, const VibKernel& kernel, int order, double t_fs) {
  check_waiting_time(t_fs);
  const int n = dec.n_molecules();
  if (n < 2) return 0.0;
  const auto g = propagator(dec, t_fs);
  const cplx z = vib_phase(kernel, t_fs);
  const auto d = [](int a, int b) { return a == b ? 1 : 0; };
  const int mm = kernel.m_max();

  // sum over dark modes q = 1..N-1 of exp(i (phi_sq + phi_ql)), as a function of s - l.
  std::vector<cplx> phase(static_cast<std::size_t>(2 * n - 1));
  for (int diff = -(n - 1); diff <= n - 1; ++diff) {
    cplx acc{};
    for (int q = 1; q < n; ++q) acc += std::polar(1.0, -2.0 * std::numbers::pi * diff * q / n);
    phase[static_cast<std::size_t>(diff + n - 1)] = acc;
  }

  double sum = 0.0;
  for (int m1 = 0; m1 <= std::min(order, mm); ++m1) {
    const int m3 = order - m1;
    if (m3 > mm) continue;
    const double denom = dec.dark().real() + order * kernel.gamma_v();
    for (int s = 0; s < n; ++s)
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j)
          for (int jp = 0; jp < n; ++jp) {
            const double w13 = kernel.weight(m1) * kernel.weight(m3) * signed_power(d(s, l), m1) *
                               signed_power(d(s, j) - d(s, jp), m3);
            if (w13 == 0.0) continue;
            const cplx base = phase[static_cast<std::size_t>(s - l + n - 1)] *
                              std::conj(g.molecule(l == jp)) * g.molecule(l == j);
            for (int m2 = 0; m2 <= mm; ++m2) {
              const double w = w13 * kernel.weight(m2) * signed_power(d(jp, l) - d(j, l), m2);
              if (w != 0.0) sum += w / denom * (base * std::pow(z, m2 + m3)).real();
            }
          }
  }
  const double l2 = kernel.lambda() * kernel.lambda();
  return std::exp(l2) / n * sum;
}

namespace {

void fit(SliceTrace& tr) {
  double num = 0.0, den = 0.0, peak = 0.0, fpeak = 0.0;
  for (std::size_t k = 0; k < tr.formula.size(); ++k) {
    num += tr.formula[k] * tr.grid[k];
    den += tr.formula[k] * tr.formula[k];
    peak = std::max(peak, std::abs(tr.grid[k]));
    fpeak = std::max(fpeak, std::abs(tr.formula[k]));
  }
  // A formula trace that is zero up to rounding (the n = 0 dark line) has no
  // meaningful scale.
  tr.fitted_scale = fpeak > 1e-8 * peak && den > 0.0 ? num / den : 0.0;
  double worst = 0.0;
  for (std::size_t k = 0; k < tr.formula.size(); ++k)
    worst = std::max(worst, std::abs(tr.grid[k] - tr.fitted_scale * tr.formula[k]));
  tr.residual = peak > 0.0 ? worst / peak : 0.0;
}

}  // namespace

SliceReport pump_probe_slices(const SystemParams& sys, const ModeDecomposition& dec,
                              const VibKernel& kernel, const std::vector<double>& times,
                              int dark_orders) {
  for (double t : times) check_waiting_time(t);
  SliceReport rep;
  rep.times = times;
  const double off = sys.axis_offset();

  rep.upper.label = "UP";
  rep.upper.omega = dec.upper().imag() + off;
  for (double t : times) {
    rep.upper.formula.push_back(slice_upper_formula(dec, kernel, t));
    rep.upper.grid.push_back(pump_probe_at(sys, dec, kernel, dec.upper().imag(), t));
  }
  fit(rep.upper);

  if (dec.n_molecules() > 1) {
    for (int order = 0; order <= dark_orders; ++order) {
      SliceTrace tr;
      tr.label = order == 0 ? "D" : fmt::format("D-{}wv", order);
      const double w = dec.dark().imag() - order * kernel.omega_v();
      tr.omega = w + off;
      for (double t : times) {
        tr.formula.push_back(slice_dark_formula(dec, kernel, order, t));
        tr.grid.push_back(pump_probe_at(sys, dec, kernel, w, t));
      }
      fit(tr);
      rep.dark.push_back(std::move(tr));
    }
  }
  return rep;
}

}  // namespace polariton
