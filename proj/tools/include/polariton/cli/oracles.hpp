#pragma once

#include <Eigen/Dense>

#include "polariton/signals.hpp"

namespace polariton::cli {

/// Numerical half-line transform of the propagator, int_0^L G(theta)
/// exp(i Omega theta) dtheta with L chosen so the integrand has decayed below
/// 1e-17, by composite 20-point Gauss-Legendre on quarter-period panels.
/// Returns the five distinct entries in MoleculeSymmetricMatrix form.
MoleculeSymmetricMatrix quadrature_resolvent(const ModeDecomposition& dec, cplx omega);

/// One pump-probe term resolved by mode: only eigenmodes with
/// include(k) == true in the resolvent, and only m1 + m3 == order. Dense
/// loops, no class collapse.
template <typename Pred>
double pump_probe_mode_term(const ModeDecomposition& dec, const VibKernel& kernel, double omega,
                            double t_fs, int order, Pred include);

/// Largest entry-wise relative difference between two structured matrices.
double max_relative_difference(const MoleculeSymmetricMatrix& a, const MoleculeSymmetricMatrix& b);

}  // namespace polariton::cli

#include "polariton/cli/oracles_impl.hpp"
