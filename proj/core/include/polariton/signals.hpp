#pragma once

#include <complex>
#include <string>
#include <vector>

#include "polariton/model.hpp"
#include "polariton/propagator.hpp"
#include "polariton/spectrum.hpp"
#include "polariton/vibrations.hpp"

namespace polariton {

// All kernels take rotating-frame frequencies; the grid wrappers convert
// from the absolute axes using SystemParams::axis_offset().

// ---------------------------------------------------------------- absorption

/// S_A at rotating-frame omega. The m = 0 term sums the resolvent over every
/// (i, l) pair, m >= 1 terms only over i = l.
double absorption_at(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                     double omega);

/// Real spectrum on `axis` (absolute frequencies; axis.offset is overwritten
/// with the system offset). Imaginary parts of the stored values are zero.
SpectrumGrid linear_absorption(const SystemParams& sys, const ModeDecomposition& dec,
                               const VibKernel& kernel, Axis axis, int workers = 1);

/// Closed-form peak-height ratios, index m - 1 for m = 1..m_max. Exact for
/// gamma_x == gamma_c and zero detunings.
struct PeakRatios {
  std::vector<double> eds_over_lp;       // S_A(w_D + m w_v) / S_A(w_LP)
  std::vector<double> eds_over_up;
  std::vector<double> sideband_over_lp;  // S_A(w_LP + m w_v) / S_A(w_LP)
  std::vector<double> sideband_over_up;
};

PeakRatios peak_ratios(const SystemParams& sys, const ModeDecomposition& dec, int m_max);

/// Absolute-axis line positions of the three mode families.
struct ModeLines {
  double lower;
  double upper;
  double dark;
};

ModeLines mode_lines(const SystemParams& sys, const ModeDecomposition& dec) noexcept;

// ---------------------------------------------------------------------- 2D

struct TwodOptions {
  int workers = 1;
  /// Drops the (-1)^(m3 + m6) sign. Only for mutation testing of the oracles.
  bool drop_vibronic_parity = false;
};

/// S(Omega3, T, Omega1) at formula arguments (rotating frame, Omega1 of the
/// rephasing convention, peaks at negative Omega1), evaluated by class
/// enumeration. Throws NegativeWaitingTime for T < 0.
cplx twod_signal_point(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                       double omega1, double omega3, double t_fs, const TwodOptions& opts = {});

/// Literal index loops over i, l, j, j', p and m1..m6; throws TooLarge for N > 6.
cplx twod_signal_direct(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                        double omega1, double omega3, double t_fs);

/// Complex grid over absolute omega1 (rows) x omega3 (columns). omega1 maps to
/// the formula argument -(omega1 - offset).
SpectrumGrid twod_signal(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                         Axis omega1, Axis omega3, double t_fs, const TwodOptions& opts = {});

// -------------------------------------------------------------- pump-probe

double pump_probe_at(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                     double omega, double t_fs);

/// Literal quadruple loop over molecule labels; throws TooLarge for N > 12.
double pump_probe_direct(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                         double omega, double t_fs);

SpectrumGrid pump_probe(const SystemParams& sys, const ModeDecomposition& dec, const VibKernel& kernel,
                        Axis axis, double t_fs, int workers = 1);

/// Waiting-time trace at one probe frequency from the analytic slice formula
/// together with the full pump-probe value at the same frequency.
struct SliceTrace {
  std::string label;
  double omega = 0.0;             // absolute axis
  std::vector<double> formula;
  std::vector<double> grid;
  double fitted_scale = 0.0;      // least-squares c in grid ~ c * formula
  double residual = 0.0;          // max |grid - c formula| / max |grid|
};

struct SliceReport {
  std::vector<double> times;
  SliceTrace upper;               // at w_UP
  std::vector<SliceTrace> dark;   // at w_D - n w_v, n = 0..dark_orders
};

/// Upper-polariton trace (e^{-l^2}/(2 g_UP)) sum S_m (d_j'l - d_jl)^m Re[G* G e^{i xi_m T}]
/// summed over l, j, j'.
double slice_upper_formula(const ModeDecomposition& dec, const VibKernel& kernel, double t_fs);

/// Dark trace at w_D - n w_v summed over m1 + m3 = n, with the explicit site
/// phases exp(-2 pi i (s - l) q / N) of the Fourier dark basis.
double slice_dark_formula(const ModeDecomposition& dec, const VibKernel& kernel, int n, double t_fs);

SliceReport pump_probe_slices(const SystemParams& sys, const ModeDecomposition& dec,
                              const VibKernel& kernel, const std::vector<double>& times,
                              int dark_orders = 2);

}  // namespace polariton
