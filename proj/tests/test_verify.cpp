#include <bn2/verify.hpp>

#include <gtest/gtest.h>

#include "oracle_values.hpp"

using namespace bn2;
using L = ClassLabel;

TEST(ClosedForm, TrigonalExamples) {
  const auto c = closed_form_class(3);
  EXPECT_EQ(c.coefficient(L::kappa1_sq()), make_rational(41, 144));
  EXPECT_EQ(c.coefficient(L::theta(2)), -2);
  EXPECT_EQ(c.coefficient(L::delta(1, 4)), make_rational(3251, 360));
  EXPECT_EQ(c.coefficient(L::delta(0, 3)), make_rational(-41, 72));
  EXPECT_EQ(c.coefficient(L::delta0_sq()), -c.coefficient(L::kappa1_sq()));
}

TEST(ClosedForm, EqualsTheTabulatedGenusSixClass) { EXPECT_EQ(closed_form_class(3), theorem1_class()); }

TEST(ClosedForm, GenusEightMatchesOracle) {
  const auto c = closed_form_class(4);
  EXPECT_EQ(c.terms().size(), oracle::closed_form_k4.size());
  for (const auto& [label, value] : oracle::closed_form_k4)
    EXPECT_EQ(c.coefficient(parse_label(label)), parse_rational(value)) << label;
}

TEST(ClosedForm, GenusTenSampleMatchesOracle) {
  const auto c = closed_form_class(5);
  for (const auto& [label, value] : oracle::closed_form_k5_sample)
    EXPECT_EQ(c.coefficient(parse_label(label)), parse_rational(value)) << label;
}

TEST(ClosedForm, GeneralDeltaFormulaIsSymmetric) {
  for (int k = 3; k <= 12; ++k)
    for (int i = 1; i <= 2 * k; ++i)
      for (int j = 1; j <= 2 * k; ++j) EXPECT_EQ(delta_pair_numerator(k, i, j), delta_pair_numerator(k, j, i));
}

TEST(ClosedForm, RejectsSmallK) { EXPECT_THROW(closed_form_class(2), std::invalid_argument); }

TEST(GenusSixTable, Entries) {
  const auto t = theorem1_class();
  EXPECT_EQ(t.terms().size(), 25u);
  EXPECT_EQ(t.coefficient(L::kappa2()), -4);
  EXPECT_EQ(t.coefficient(L::delta(0, 0)), 1);
  EXPECT_EQ(t.coefficient(L::delta(2, 2)), make_rational(1255, 72));
}

TEST(Pullback, Matrix) {
  const auto m = pullback_matrix(6);
  EXPECT_EQ(m.at(L::lambda_delta0()), (PullbackImage{make_rational(1, 6), 0, 0, 0, 0}));
  EXPECT_EQ(m.at(L::omega(2)), (PullbackImage{make_rational(-1, 120), make_rational(-13, 120), make_rational(1, 120),
                                              make_rational(-24, 120), make_rational(-168, 120)}));
  EXPECT_EQ(m.at(L::kappa1_sq()), (PullbackImage{make_rational(17, 120), make_rational(127, 120),
                                                 make_rational(37, 120), 1, 7}));
  EXPECT_EQ(m.count(L::theta(2)), 0u);
  ClassExpression theta2(6);
  theta2.set(L::theta(2), 1);
  EXPECT_EQ(pullback(theta2), PullbackImage{});
}

TEST(Pullback, ClosedFormVanishesOnFourCoordinates) {
  for (int k = 3; k <= 8; ++k) {
    const auto img = pullback(closed_form_class(k));
    EXPECT_EQ(img[0], 0) << k;
    EXPECT_EQ(img[1], 0) << k;
    EXPECT_EQ(img[2], 0) << k;
    EXPECT_EQ(img[4], 0) << k;
  }
}

TEST(Pullback, PerturbationIsDetected) {
  auto c = closed_form_class(3);
  c.add(L::kappa1_sq(), 1);
  EXPECT_NE(pullback(c)[1], 0);
}

TEST(M4, StatedClassSatisfiesAllRelations) {
  const auto sys = m4::relations();
  ASSERT_EQ(sys.a.rows(), 13u);
  ASSERT_EQ(sys.a.cols(), 14u);
  auto cls = m4::twice_class();
  for (auto& v : cls) v /= 2;
  EXPECT_EQ(multiply(sys.a, cls), sys.b);
  EXPECT_EQ(sys.b[0], 36);  // 8 * (9/2)
}

TEST(M4, RankAndNullspace) {
  const auto sys = m4::relations();
  EXPECT_EQ(rank(sys.a), 13u);
  const auto ns = nullspace(sys.a);
  ASSERT_EQ(ns.size(), 1u);
  auto rel = m4::rank_relation();
  for (auto& v : rel) v /= 60;
  EXPECT_EQ(ns[0], rel);
}

TEST(M4, AddingTheRankRelationKeepsRelationsSatisfied) {
  const auto sys = m4::relations();
  auto cls = m4::twice_class();
  const auto rel = m4::rank_relation();
  for (std::size_t n = 0; n < cls.size(); ++n) cls[n] = cls[n] / 2 + make_rational(3, 7) * rel[n];
  EXPECT_EQ(multiply(sys.a, cls), sys.b);
}

TEST(Checks, AllPass) {
  for (const auto& r : run_all_checks({6, 12})) {
    EXPECT_TRUE(r.passed) << to_json(r).dump();
    EXPECT_TRUE(r.diff.empty()) << r.check;
  }
}

TEST(Checks, ReportsAreSortedAndShaped) {
  const auto reports = run_all_checks({3, 7});
  std::vector<std::string> names;
  for (const auto& r : reports) {
    names.push_back(r.check);
    const auto j = to_json(r);
    for (const char* key : {"check", "status", "expected", "actual", "diff"}) EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  EXPECT_EQ(names, check_names());
}

TEST(Checks, GenusFiveDiagnosticNotesConvention) {
  const auto r = check_g5_rank();
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.diagnostic);
  EXPECT_NE(r.note.find("ld2"), std::string::npos);
  EXPECT_EQ(r.actual["rank"], 19);
}

TEST(Checks, UnknownCheckThrows) { EXPECT_THROW(run_check("nope"), std::invalid_argument); }
