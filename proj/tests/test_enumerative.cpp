#include <bn2/enumerative.hpp>

#include <gtest/gtest.h>

#include "oracle_values.hpp"

using namespace bn2;

TEST(Rho, Values) {
  EXPECT_EQ(rho(6, 1, 3), -2);
  EXPECT_EQ(rho(0, 1, 1), 0);
  EXPECT_EQ(rho(4, 1, 3, {{0, 1}}), -1);
  EXPECT_THROW(rho(4, 1, 3, {{0, 3}}), PreconditionError);
  EXPECT_THROW(rho(4, 2, 3, {{0, 1}}), PreconditionError);
}

TEST(ReduceBaseLocus, Examples) {
  EXPECT_EQ(reduce_base_locus(3, {1, 2}, {0, 0}), (ReducedPencil{2, {0, 1}, {0, 0}}));
  EXPECT_EQ(reduce_base_locus(5, {0, 2}, {0, 3}), (ReducedPencil{5, {0, 2}, {0, 3}}));
  EXPECT_EQ(reduce_base_locus(4, {1, 1}, {1, 3}), (ReducedPencil{2, {0, 0}, {0, 2}}));
  EXPECT_FALSE(reduce_base_locus(4, {1, 1}, {1, 3}).valid());
  EXPECT_TRUE(reduce_base_locus(3, {1, 2}, {0, 0}).valid());
  EXPECT_THROW(reduce_base_locus(3, {0, 3}, {0, 0}), PreconditionError);
  EXPECT_THROW(reduce_base_locus(2, {1, 1}, {1, 1}), PreconditionError);
}

TEST(Castelnuovo, GeneralDeterminantMatchesOracle) {
  for (const auto& c : oracle::castelnuovo_cases)
    EXPECT_EQ(castelnuovo_general(c.g, c.r, c.d, c.alpha, c.beta), parse_rational(c.value))
        << "g=" << c.g << " r=" << c.r << " d=" << c.d;
}

TEST(Castelnuovo, PencilFormulaExamples) {
  EXPECT_EQ(castelnuovo_N(2, 3, {0, 1}, {0, 1}), 2);
  EXPECT_EQ(castelnuovo_N(2, 2, {0, 0}, {0, 0}), 1);
  EXPECT_EQ(castelnuovo_N(2, 3, {1, 2}, {0, 1}), castelnuovo_N(2, 2, {0, 1}, {0, 1}));
  EXPECT_EQ(castelnuovo_N(3, 3, {0, 1}, {0, 0}), castelnuovo_N(3, 3, {0, 0}, {0, 1}));
}

TEST(Castelnuovo, PencilFormulaEqualsDeterminantOnGrid) {
  for (int g = 0; g <= 8; ++g)
    for (int d = 1; d <= 6; ++d)
      for (const auto& a : schubert_indices(d))
        for (const auto& b : schubert_indices(d)) {
          const std::vector<int> av{a.a0, a.a1}, bv{b.a0, b.a1};
          ASSERT_EQ(castelnuovo_N(g, d, a, b), castelnuovo_general(g, 1, d, av, bv))
              << g << " " << d << " " << to_string(a) << " " << to_string(b);
        }
}

TEST(Castelnuovo, SymmetricAndReductionInvariantOnGrid) {
  for (int g = 0; g <= 8; ++g)
    for (int d = 1; d <= 6; ++d)
      for (const auto& a : schubert_indices(d))
        for (const auto& b : schubert_indices(d)) {
          EXPECT_EQ(castelnuovo_N(g, d, a, b), castelnuovo_N(g, d, b, a));
          if (a.a0 + b.a0 >= d) continue;
          const auto red = reduce_base_locus(d, a, b);
          if (red.valid()) {
            EXPECT_EQ(castelnuovo_N(g, d, a, b), castelnuovo_N(g, red.d, red.alpha, red.beta));
          }
        }
}

TEST(Castelnuovo, IntegralNonnegativeInCountingRegime) {
  for (int g = 0; g <= 8; ++g)
    for (int d = 1; d <= 6; ++d)
      for (const auto& a : schubert_indices(d))
        for (const auto& b : schubert_indices(d)) {
          if (rho(g, 1, d, {a, b}) != 0) continue;
          const auto n = castelnuovo_N(g, d, a, b);
          EXPECT_TRUE(is_integer(n)) << to_string(n);
          EXPECT_GE(n, 0);
        }
}

TEST(Counts, MovingPointExamples) {
  EXPECT_EQ(count_n(4, 3, {0, 1}), 24);
  EXPECT_EQ(count_n(2, 2, {0, 1}), 6);
  EXPECT_EQ(count_n(2, 3, {1, 2}), 6);
  EXPECT_EQ(count_m(4, 3, {0, 1}), 264);
  EXPECT_EQ(count_m(2, 2, {0, 1}), 30);
  EXPECT_EQ(count_m(2, 3, {1, 2}), 30);
}

TEST(Counts, MovingPointPreconditionsAreDistinct) {
  const auto reason = [](auto f) {
    try {
      f();
    } catch (const PreconditionError& e) {
      return e.reason();
    }
    ADD_FAILURE() << "no PreconditionError";
    return PreconditionError::Reason::BadParameters;
  };
  EXPECT_EQ(reason([] { count_n(4, 3, {0, 0}); }), PreconditionError::Reason::WrongRho);
  EXPECT_EQ(reason([] { count_n(4, 3, {0, 5}); }), PreconditionError::Reason::InvalidIndex);
  EXPECT_EQ(reason([] { count_m(4, 3, {0, 0}); }), PreconditionError::Reason::WrongRho);
  // rho(1,1,1) = -1 with no ramification at all: no pencil on a general curve.
  EXPECT_EQ(reason([] { count_n(1, 1, {0, 0}); }), PreconditionError::Reason::NegativeReducedRho);
}

TEST(Counts, ReducedRhoFailsOnlyForPureBasePoints) {
  for (int g = 0; g <= 12; ++g)
    for (int d = 1; d <= 10; ++d)
      for (const auto& a : schubert_indices(d)) {
        if (rho(g, 1, d, {a}) != -1) continue;
        EXPECT_EQ(moving_point_count_defined(g, d, a), a.a0 != a.a1) << g << " " << d << " " << to_string(a);
      }
}

TEST(Counts, MovingPointReductionInvariance) {
  for (int g = 0; g <= 10; ++g)
    for (int d = 1; d <= 8; ++d)
      for (const auto& a : schubert_indices(d)) {
        if (!moving_point_count_defined(g, d, a)) continue;
        const SchubertIndex reduced{0, a.a1 - a.a0};
        EXPECT_EQ(count_n(g, d, a), count_n(g, d - a.a0, reduced));
        EXPECT_EQ(count_m(g, d, a), count_n(g, d, a) * (3 * g - 1));
        EXPECT_GT(count_n(g, d, a), 0);
      }
}

TEST(Counts, Ell) {
  EXPECT_EQ(count_ell(2, 2), 2);
  EXPECT_EQ(count_ell(4, 3), 6);
  EXPECT_EQ(count_ell(6, 4), 20);
  EXPECT_THROW(count_ell(5, 3), PreconditionError);
}

TEST(Sums, MatchOracle) {
  for (const auto& gd : oracle::genus_data) {
    for (const auto& [i, v] : gd.T) EXPECT_EQ(sum_T(i, gd.g, gd.k), v) << "T " << i << " g=" << gd.g;
    for (const auto& [ij, v] : gd.D)
      EXPECT_EQ(sum_D(ij.first, ij.second, gd.g, gd.k), v) << "D " << ij.first << "," << ij.second << " g=" << gd.g;
    for (const auto& [i, v] : gd.S16) EXPECT_EQ(sum_S16(i, gd.g, gd.k), v) << "S16 " << i << " g=" << gd.g;
    EXPECT_EQ(count_n(gd.g - 2, gd.k, {0, 1}), gd.n_top);
    EXPECT_EQ(count_m(gd.g - 2, gd.k, {0, 1}), gd.m_top);
    EXPECT_EQ(count_ell(gd.g - 2, gd.k), gd.ell);
    EXPECT_EQ(castelnuovo_N(gd.g - 4, gd.k, {0, 1}, {0, 1}), gd.N4);
  }
}

TEST(Sums, EmptyIndexSetsGiveZero) {
  // Degree-1 pencils admit no ramification index with rho = -1.
  EXPECT_EQ(sum_T(2, 6, 1), 0);
  EXPECT_EQ(sum_D(2, 2, 6, 1), 0);
  EXPECT_EQ(sum_S16(3, 6, 1), 0);
}

TEST(Sums, S4SumIsOneThirdOfD2i) {
  for (int k = 3; k <= 6; ++k) {
    const int g = 2 * k;
    for (int i = 2; i <= g - 3; ++i) EXPECT_EQ(3 * sum_S4(i, g, k), sum_D(2, i, g, k)) << "g=" << g << " i=" << i;
  }
}

TEST(Sums, TrigonalAnchor) {
  // 2*(41/144) - 329/144 + 1975/144 = T_2 / ((2*2-2)(2*4-2))
  EXPECT_EQ(make_rational(sum_T(2, 6, 3), 12), 2 * make_rational(41, 144) - make_rational(329, 144) +
                                                   make_rational(1975, 144));
}
