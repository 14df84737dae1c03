#include "polariton/index_classes.hpp"

#include <algorithm>

namespace polariton {

double falling_factorial(int n, int k) noexcept {
  double out = 1.0;
  for (int r = 0; r < k; ++r) out *= static_cast<double>(n - r);
  return std::max(out, 0.0);
}

double IndexClass::multiplicity(int n_molecules) const noexcept {
  return falling_factorial(n_molecules, blocks);
}

std::array<bool, 6> IndexClass::pair_equal() const noexcept {
  return {same(kPosJp, kPosJ), same(kPosI, kPosL), same(kPosJ, kPosL),
          same(kPosJp, kPosL), same(kPosI, kPosJ), same(kPosI, kPosJp)};
}

namespace {

std::array<IndexClass, 15> enumerate() {
  std::array<IndexClass, 15> out{};
  std::size_t count = 0;
  IndexClass c;
  // a[0] = 0, a[k] <= 1 + max(a[0..k-1]).
  for (int b1 = 0; b1 <= 1; ++b1)
    for (int b2 = 0; b2 <= 1 + std::max(0, b1); ++b2)
      for (int b3 = 0; b3 <= 1 + std::max({0, b1, b2}); ++b3) {
        c.block = {0, b1, b2, b3};
        c.blocks = 1 + std::max({b1, b2, b3});
        out[count++] = c;
      }
  return out;
}

const std::array<IndexClass, 15>& table() {
  static const std::array<IndexClass, 15> t = enumerate();
  return t;
}

}  // namespace

std::span<const IndexClass> index_classes() noexcept { return table(); }

const IndexClass& classify(int i, int l, int j, int jp) noexcept {
  const std::array<int, 4> raw{i, l, j, jp};
  std::array<int, 4> rgs{};
  int next = 0;
  for (int k = 0; k < 4; ++k) {
    rgs[k] = -1;
    for (int q = 0; q < k; ++q)
      if (raw[q] == raw[k]) {
        rgs[k] = rgs[q];
        break;
      }
    if (rgs[k] < 0) rgs[k] = next++;
  }
  for (const auto& c : table())
    if (c.block == rgs) return c;
  return table()[0];  // unreachable
}

}  // namespace polariton
