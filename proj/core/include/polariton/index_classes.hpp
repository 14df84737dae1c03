#pragma once

#include <array>
#include <span>

namespace polariton {

/// Equality pattern of the molecule labels (i, l, j, j') as a set partition.
/// block[k] is the restricted-growth label of position k (0 = i, 1 = l,
/// 2 = j, 3 = j').
struct IndexClass {
  std::array<int, 4> block{};
  int blocks = 1;

  bool same(int a, int b) const noexcept { return block[a] == block[b]; }

  /// Number of tuples in {1..N}^4 with exactly this pattern.
  double multiplicity(int n_molecules) const noexcept;

  /// Whether the Kronecker pair attached to m_s is an equality, s = 1..6,
  /// in the order (j'j, il, jl, j'l, ij, ij'). Unequal pairs pin m_s to 0.
  std::array<bool, 6> pair_equal() const noexcept;
};

inline constexpr int kPosI = 0;
inline constexpr int kPosL = 1;
inline constexpr int kPosJ = 2;
inline constexpr int kPosJp = 3;

/// The fifteen partitions in lexicographic restricted-growth order.
std::span<const IndexClass> index_classes() noexcept;

/// Classifies a concrete tuple; the returned pointer refers into index_classes().
const IndexClass& classify(int i, int l, int j, int jp) noexcept;

/// N (N-1) ... (N-k+1), zero when k > N.
double falling_factorial(int n, int k) noexcept;

}  // namespace polariton
