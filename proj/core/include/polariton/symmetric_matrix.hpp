#pragma once

#include <complex>

#include <Eigen/Dense>

namespace polariton {

using cplx = std::complex<double>;

/// An (N+1)x(N+1) matrix over N identical molecules plus one photon mode
/// that is invariant under any relabeling of the molecules. Five numbers
/// describe it completely:
///
///     [ d o o .. o  r ]
///     [ o d o .. o  r ]
///     [ ...           ]
///     [ q q q .. q  e ]
///
/// Every function of the dynamics matrix (propagator, resolvent) has this
/// form, so index sums over molecules collapse to multiplicity counts.
struct MoleculeSymmetricMatrix {
  int n = 1;
  cplx diag{};          // (l, l)
  cplx off{};           // (l, j), l != j
  cplx mol_photon{};    // (l, photon)
  cplx photon_mol{};    // (photon, l)
  cplx photon{};        // (photon, photon)

  /// Entry between two molecule labels; only equality matters.
  cplx molecule(bool same_site) const noexcept { return same_site ? diag : off; }

  /// Entry with raw indices, molecules 0..n-1 and the photon at index n.
  cplx at(int row, int col) const noexcept {
    const bool rp = row == n;
    const bool cp = col == n;
    if (rp && cp) return photon;
    if (rp) return photon_mol;
    if (cp) return mol_photon;
    return row == col ? diag : off;
  }

  MoleculeSymmetricMatrix conj() const noexcept {
    return {n, std::conj(diag), std::conj(off), std::conj(mol_photon), std::conj(photon_mol),
            std::conj(photon)};
  }

  Eigen::MatrixXcd dense() const {
    Eigen::MatrixXcd m(n + 1, n + 1);
    for (int r = 0; r <= n; ++r)
      for (int c = 0; c <= n; ++c) m(r, c) = at(r, c);
    return m;
  }
};

/// Product with the intermediate index p summed by class: p equal to the row
/// molecule, equal to the column molecule, another molecule, or the photon.
inline MoleculeSymmetricMatrix operator*(const MoleculeSymmetricMatrix& a,
                                         const MoleculeSymmetricMatrix& b) noexcept {
  const double n = a.n;
  MoleculeSymmetricMatrix out;
  out.n = a.n;
  out.diag = a.diag * b.diag + (n - 1) * a.off * b.off + a.mol_photon * b.photon_mol;
  out.off = a.diag * b.off + a.off * b.diag + (n - 2) * a.off * b.off + a.mol_photon * b.photon_mol;
  out.mol_photon = a.diag * b.mol_photon + (n - 1) * a.off * b.mol_photon + a.mol_photon * b.photon;
  out.photon_mol = a.photon_mol * b.diag + (n - 1) * a.photon_mol * b.off + a.photon * b.photon_mol;
  out.photon = n * a.photon_mol * b.mol_photon + a.photon * b.photon;
  return out;
}

}  // namespace polariton
