#include "polariton/cli/oracles.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>

namespace polariton::cli {

MoleculeSymmetricMatrix quadrature_resolvent(const ModeDecomposition& dec, cplx omega) {
  const double decay = dec.min_decay() + omega.imag();
  const double length = 40.0 / decay;
  double fastest = 0.0;
  for (cplx mu : {dec.lower(), dec.upper(), dec.dark()})
    fastest = std::max(fastest, std::abs(mu.imag() - omega.real()));
  const double panel = std::min(length, 0.25 * 2.0 * std::numbers::pi / std::max(fastest, 1e-300));
  const int panels = static_cast<int>(std::ceil(length / panel));
  const double h = length / panels;

  using Rule = boost::math::quadrature::gauss<double, 20>;
  const cplx iu{0.0, 1.0};
  std::array<cplx, 5> acc{};
  for (int p = 0; p < panels; ++p) {
    const double a = p * h;
    const auto add = [&](double x, double w) {
      const double theta = a + 0.5 * h * (x + 1.0);
      const auto g = dec.map([theta](cplx mu) { return std::exp(-mu * theta); });
      const cplx ph = std::exp(iu * omega * theta) * (0.5 * h * w);
      acc[0] += ph * g.diag;
      acc[1] += ph * g.off;
      acc[2] += ph * g.mol_photon;
      acc[3] += ph * g.photon_mol;
      acc[4] += ph * g.photon;
    };
    // The stored abscissae are the non-negative half of a symmetric rule.
    const auto& xs = Rule::abscissa();
    const auto& ws = Rule::weights();
    for (std::size_t k = 0; k < xs.size(); ++k) {
      add(xs[k], ws[k]);
      if (xs[k] != 0.0) add(-xs[k], ws[k]);
    }
  }
  return {dec.n_molecules(), acc[0], acc[1], acc[2], acc[3], acc[4]};
}

double max_relative_difference(const MoleculeSymmetricMatrix& a, const MoleculeSymmetricMatrix& b) {
  const std::array<std::pair<cplx, cplx>, 5> pairs{{{a.diag, b.diag},
                                                    {a.off, b.off},
                                                    {a.mol_photon, b.mol_photon},
                                                    {a.photon_mol, b.photon_mol},
                                                    {a.photon, b.photon}}};
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    const double scale = std::max(std::abs(x), std::abs(y));
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(x - y) / scale);
  }
  return worst;
}

}  // namespace polariton::cli
