#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>

#include "polariton/units.hpp"
#include "polariton/vibrations.hpp"
#include "test_util.hpp"

namespace polariton {
namespace {

TEST(FranckCondon, Values) {
  EXPECT_NEAR(franck_condon(1.0, 0), 0.3678794412, 1e-10);
  EXPECT_NEAR(franck_condon(1.0, 1), 0.3678794412, 1e-10);
  EXPECT_NEAR(franck_condon(1.0, 2), 0.1839397206, 1e-10);
  EXPECT_EQ(franck_condon(0.0, 0), 1.0);
  EXPECT_EQ(franck_condon(0.0, 3), 0.0);
  double sum = 0.0;
  for (int m = 0; m <= 20; ++m) sum += franck_condon(1.0, m);
  EXPECT_NEAR(sum, 1.0, 1e-14);
  // Log-space evaluation stays finite far into the tail.
  EXPECT_GT(franck_condon(3.0, 150), 0.0);
  EXPECT_TRUE(std::isfinite(franck_condon(3.0, 400)));
}

TEST(FranckCondon, MatchesPoissonPmf) {
  for (double lambda : {0.3, 1.0, 2.2, 3.0})
    for (int m = 0; m < 40; ++m) {
      const double pmf = boost::math::gamma_p_derivative(m + 1.0, lambda * lambda);
      EXPECT_NEAR(franck_condon(lambda, m), pmf, 1e-13 * std::max(1.0, pmf));
    }
}

TEST(XiShift, Definition) {
  EXPECT_EQ(xi_shift(0, 1200, 20), cplx{});
  EXPECT_EQ(xi_shift(2, 1200, 20), cplx(2400, 40));
  const double w = 500.0;
  EXPECT_EQ(w - std::conj(xi_shift(1, 1200, 20)), cplx(w - 1200, 20));
}

TEST(FcTruncation, Examples) {
  EXPECT_EQ(fc_truncation(0.0, 1e-3), 0);
  EXPECT_EQ(fc_truncation(1.0, 1e-10), 12);
  // Oracle: Poisson(1) upper tail from the regularized incomplete gamma.
  EXPECT_LT(boost::math::gamma_p(13.0, 1.0), 1e-10);
  EXPECT_GE(boost::math::gamma_p(12.0, 1.0), 1e-10);
  EXPECT_THROW((void)fc_truncation(1.0, 0.0), Error);
  EXPECT_THROW((void)fc_truncation(1.0, 1.0), Error);
}

TEST(FcTruncation, TailMatchesIncompleteGamma) {
  for (double lambda : {0.5, 1.0, 2.0, 3.0})
    for (int m = 0; m < 30; ++m) {
      const double oracle = boost::math::gamma_p(m + 1.0, lambda * lambda);
      EXPECT_NEAR(fc_tail(lambda, m), oracle, 1e-13 + 1e-10 * oracle);
    }
}

TEST(FcTruncation, MonotoneInLambda) {
  for (double eps : {1e-4, 1e-10, 1e-14}) {
    int prev = 0;
    for (double lambda = 0.0; lambda <= 3.0; lambda += 0.05) {
      const int m = fc_truncation(lambda, eps);
      EXPECT_GE(m, prev);
      prev = m;
    }
  }
}

TEST(VibKernel, Invariants) {
  for (double lambda : {0.0, 0.05, 0.5, 1.0, 2.0, 3.0}) {
    const auto k = VibKernel::from_tail(lambda, 1200, 20, 1e-10);
    double sum = 0.0;
    for (double w : k.weights()) sum += w;
    EXPECT_GE(sum, 1.0 - 1e-10);
    if (lambda > 0.0) EXPECT_GE(k.m_max(), 1);
    EXPECT_EQ(k.weights().size(), static_cast<std::size_t>(k.m_max()) + 1);
  }
  const auto fixed = VibKernel::with_order(1.0, 1200, 20, 3);
  EXPECT_EQ(fixed.m_max(), 3);
  EXPECT_NEAR(fixed.tail_eps(), boost::math::gamma_p(4.0, 1.0), 1e-15);
}

TEST(ModeCommutator, Branches) {
  EXPECT_EQ(mode_commutator(5.0, 5.0, 1200, 20), cplx(1.0, 0.0));
  test::Rng rng(3);
  for (int s = 0; s < 100; ++s) {
    const double t = test::uniform(rng, 0, 500), tp = test::uniform(rng, 0, 500);
    EXPECT_NEAR(std::abs(mode_commutator(t, tp, 1200, 0.0)), 1.0, 1e-14);
  }
  const double one_over_gamma = inverse_wavenumber_to_fs(1.0 / 20.0);
  EXPECT_NEAR(std::abs(mode_commutator(one_over_gamma + 3.0, 3.0, 1200, 20)), std::exp(-1.0), 1e-12);
  EXPECT_NEAR(std::abs(mode_commutator(3.0, one_over_gamma + 3.0, 1200, 20)), std::exp(-1.0), 1e-12);
  // Earlier-than branch rotates the other way.
  const double th = fs_to_inverse_wavenumber(10.0);
  EXPECT_LT(std::abs(mode_commutator(0.0, 10.0, 1200, 20) - std::exp(cplx(-20, 1200) * th)), 1e-14);
  EXPECT_LT(std::abs(mode_commutator(10.0, 0.0, 1200, 20) - std::exp(cplx(-20, -1200) * th)), 1e-14);
}

TimeQuadruple random_quadruple(test::Rng& rng, int sites) {
  TimeQuadruple q;
  for (int a = 0; a < 4; ++a) {
    q.times[a] = test::uniform(rng, 0, 300);
    q.sites[a] = std::uniform_int_distribution<int>(0, sites - 1)(rng);
  }
  return q;
}

TEST(FourPoint, ZeroDisplacement) {
  test::Rng rng(4);
  const auto k = VibKernel::from_tail(0.0, 1200, 20);
  for (int s = 0; s < 50; ++s) {
    const auto q = random_quadruple(rng, 3);
    EXPECT_EQ(four_point_correlator(q, k), cplx(1.0, 0.0));
    EXPECT_EQ(four_point_correlator_series(q, k), cplx(1.0, 0.0));
    EXPECT_LT(std::abs(fock_oracle_correlator(q, 0.0, 1200).value - 1.0), 1e-15);
  }
}

TEST(FourPoint, PairedDistinctSites) {
  const double l2 = 0.49;
  const auto k = VibKernel::from_tail(0.7, 1200, 20);
  const TimeQuadruple q{{10.0, 40.0, 55.0, 90.0}, {1, 1, 2, 2}};
  const cplx c01 = mode_commutator(10.0, 40.0, 1200, 20);
  const cplx c23 = mode_commutator(55.0, 90.0, 1200, 20);
  const cplx want = std::exp(-2 * l2) * std::exp(l2 * (c01 + c23));
  EXPECT_LT(std::abs(four_point_correlator(q, k) - want), 1e-15);
}

// The time-ordered form written out term by term, every same-site pair taken
// from the t >= t' branch in the order it appears.
cplx ordered_form(const TimeQuadruple& q, double lambda, double wv, double gv) {
  const auto e = [&](int a, int b) -> cplx {
    if (q.sites[a] != q.sites[b]) return 0.0;
    return std::exp(-cplx(gv, wv) * fs_to_inverse_wavenumber(q.times[a] - q.times[b]));
  };
  const double l2 = lambda * lambda;
  return std::exp(-2 * l2) * std::exp(l2 * e(0, 1)) * std::exp(l2 * e(2, 3)) * std::exp(-l2 * e(1, 2)) *
         std::exp(l2 * e(0, 2)) * std::exp(l2 * e(1, 3)) * std::exp(-l2 * e(0, 3));
}

TEST(FourPoint, OrderedSegmentMatchesExplicitForm) {
  test::Rng rng(6);
  const auto k = VibKernel::from_tail(0.9, 1100, 15);
  for (int s = 0; s < 100; ++s) {
    auto q = random_quadruple(rng, 2);
    std::sort(q.times.begin(), q.times.end(), std::greater<>());  // t >= t' >= t'' >= t'''
    EXPECT_LT(std::abs(four_point_correlator(q, k) - ordered_form(q, 0.9, 1100, 15)), 1e-12);
  }
}

TEST(FourPoint, FockOracleAllOrderings) {
  test::Rng rng(7);
  for (double lambda : {0.3, 0.7, 1.0, 1.2}) {
    const auto k = VibKernel::with_order(lambda, 1200, 0.0, 0);
    for (int s = 0; s < 50; ++s) {
      const auto q = random_quadruple(rng, 3);
      const auto f = fock_oracle_correlator(q, lambda, 1200, 40);
      EXPECT_FALSE(f.truncation_warning);
      EXPECT_LT(std::abs(f.value - four_point_correlator(q, k)), 1e-8);
    }
  }
}

TEST(FourPoint, FockTruncationWarning) {
  const TimeQuadruple q{{0.0, 7.0, 13.0, 20.0}, {0, 0, 0, 0}};
  EXPECT_TRUE(fock_oracle_correlator(q, 4.0, 1200, 30).truncation_warning);
  EXPECT_THROW((void)fock_oracle_correlator(q, 1.0, 1200, 10), Error);
}

TEST(FourPoint, FockUnitarityPair) {
  // D(t) D^dag(t) = 1 on each site.
  const TimeQuadruple q{{30.0, 30.0, 0.0, 0.0}, {5, 5, 9, 9}};
  const auto k = VibKernel::with_order(1.0, 1200, 0.0, 0);
  EXPECT_LT(std::abs(fock_oracle_correlator(q, 1.0, 1200, 40).value - 1.0), 1e-12);
  EXPECT_LT(std::abs(four_point_correlator(q, k) - 1.0), 1e-14);
}

TEST(TwoPoint, ReductionFromFourPoint) {
  test::Rng rng(8);
  const double lambda = 0.8;
  const auto k = VibKernel::from_tail(lambda, 1200, 20);
  for (int s = 0; s < 50; ++s) {
    const double t = test::uniform(rng, 0, 300), tp = test::uniform(rng, 0, 300);
    for (int same : {0, 1}) {
      // D_{j'}(t) D^dag_j(t') with the second pair on a spectator site at one time.
      const TimeQuadruple q{{t, tp, 0.0, 0.0}, {0, same ? 0 : 1, 7, 7}};
      const cplx four = four_point_correlator(q, k);
      const cplx two = std::exp(-lambda * lambda) *
                       std::exp(same * lambda * lambda * mode_commutator(t, tp, 1200, 20));
      EXPECT_LT(std::abs(four - two), 1e-13);
      EXPECT_LT(std::abs(two_point_correlator(1, t, same ? 1 : 2, tp, k) - two), 1e-14);
    }
  }
}

TEST(FourPoint, EqualTimesAreReal) {
  const double lambda = 0.9;
  const auto k = VibKernel::from_tail(lambda, 1200, 20);
  const double l2 = lambda * lambda;
  // All times equal: c = 1 on every same-site pair.
  const std::vector<std::pair<std::array<int, 4>, double>> patterns{
      {{0, 0, 0, 0}, 0.0},         // 1 + 1 - 1 + 1 + 1 - 1 = 2, minus 2: 0
      {{0, 0, 1, 1}, 0.0},         // c01 + c23 = 2
      {{0, 1, 1, 0}, -4.0 * l2},   // -c12 - c03 = -2
      {{0, 1, 0, 1}, 0.0},         // c02 + c13 = 2
      {{0, 1, 2, 3}, -2.0 * l2}};
  for (const auto& [sites, log_value] : patterns) {
    const TimeQuadruple q{{42.0, 42.0, 42.0, 42.0}, sites};
    const cplx v = four_point_correlator(q, k);
    EXPECT_EQ(v.imag(), 0.0);
    EXPECT_NEAR(std::log(v.real()), log_value, 1e-13);
  }
}

TEST(FourPoint, Bounded) {
  test::Rng rng(9);
  for (double lambda : {0.4, 1.0, 1.5}) {
    const auto k = VibKernel::from_tail(lambda, 1200, 20);
    for (int s = 0; s < 200; ++s) {
      const auto q = random_quadruple(rng, 2);
      EXPECT_LE(std::abs(four_point_correlator(q, k)), std::exp(-2 * lambda * lambda) * std::exp(6 * lambda * lambda));
    }
  }
}

TEST(FourPoint, SeriesResumsClosedForm) {
  test::Rng rng(10);
  for (double lambda : {0.3, 1.0, 1.4}) {
    const int m = fc_truncation(lambda, 1e-12);
    const auto k = VibKernel::with_order(lambda, 1200, 20, m);
    for (int s = 0; s < 50; ++s) {
      const auto q = random_quadruple(rng, 2);
      EXPECT_LT(std::abs(four_point_correlator_series(q, k) - four_point_correlator(q, k)), 1e-10);
    }
  }
}

TEST(FourPoint, ContinuousAtZeroDamping) {
  test::Rng rng(12);
  const auto k0 = VibKernel::from_tail(1.0, 1200, 0.0);
  const auto k1 = VibKernel::from_tail(1.0, 1200, 1e-6);
  for (int s = 0; s < 50; ++s) {
    const auto q = random_quadruple(rng, 2);
    EXPECT_LT(std::abs(four_point_correlator(q, k1) - four_point_correlator(q, k0)), 1e-6);
  }
}

}  // namespace
}  // namespace polariton
