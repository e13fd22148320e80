#include <gtest/gtest.h>

#include <random>

#include "qm/fixtures.hpp"
#include "qm/quantum_set.hpp"

using namespace qm;

TEST(GaussSum, SmallValues) {
  EXPECT_NEAR(std::abs(gauss_sum({1, 0, 1}) - cplx<double>(1)), 0, 1e-14);
  EXPECT_NEAR(std::abs(gauss_sum({1, 0, 2})), 0, 1e-14);
  EXPECT_NEAR(std::abs(gauss_sum({1, 0, 4}) - cplx<double>(2, 2)), 0, 1e-13);
  EXPECT_NEAR(std::abs(gauss_sum({1, 0, 5})), std::sqrt(5.0), 1e-13);
}

TEST(GaussSum, ClausesImplyVanishing) {
  int matched = 0;
  for (i64 a = 1; a <= 12; ++a)
    for (i64 b = 0; b <= 12; ++b)
      for (i64 c = 1; c <= 40; ++c) {
        const GaussSumTriple g{a, b, c};
        if (!gauss_vanishes(g)) continue;
        ++matched;
        EXPECT_LT(std::abs(gauss_sum(g)), 1e-9) << a << " " << b << " " << c;
      }
  EXPECT_GT(matched, 100);
}

TEST(QuantumSet, RunningExample) {
  const auto spec = running_example();
  EXPECT_EQ(g_set(spec), std::set<i64>{1});
  EXPECT_TRUE(congruence_condition(spec));
  const auto ex = determine_exponent(spec);
  ASSERT_TRUE(ex.n.has_value());
  EXPECT_EQ(*ex.n, 1);
  EXPECT_TRUE(quantum_set_is_all(spec, ex));
}

TEST(QuantumSet, MainTermVanishesOnRandomPoints) {
  const auto spec = running_example();
  const auto ex = determine_exponent(spec);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<i64> K(1, 60);
  for (int i = 0; i < 30; ++i) {
    const i64 k = K(rng);
    std::uniform_int_distribution<i64> H(-3 * k, 3 * k);
    const auto p = QPoint::make(H(rng), k);
    const auto m = membership(spec, p, ex);
    EXPECT_TRUE(m.member()) << p.str();
    EXPECT_LT(std::abs(m.main_term), kVanishTol) << p.str();
  }
}

TEST(QuantumSet, ConditionFalseFixture) {
  const auto spec = fixture_condition_false();
  EXPECT_FALSE(congruence_condition(spec));
  const auto ex = determine_exponent(spec);
  ASSERT_TRUE(ex.n.has_value());
  EXPECT_EQ(*ex.n, 2);
}

TEST(QuantumSet, AdversarialHasNonMembers) {
  const auto spec = fixture_adversarial();
  EXPECT_EQ(g_set(spec), (std::set<i64>{1, 3}));
  const auto ex = determine_exponent(spec);
  EXPECT_FALSE(quantum_set_is_all(spec, ex));
  bool found = false;
  for (i64 k = 1; k <= 30 && !found; ++k)
    for (i64 h = 0; h < k && !found; ++h) {
      const auto p = QPoint::make(h, k);
      if (p.k != k) continue;
      const auto m = membership(spec, p, ex);
      if (!m.member()) found = std::abs(m.main_term) > 1e-6;
    }
  EXPECT_TRUE(found);
}

TEST(QuantumSet, MembershipIsSInvariant) {
  const auto spec = running_example();
  const auto ex = determine_exponent(spec);
  for (auto [h, k] : {std::pair{1, 3}, {2, 5}, {3, 7}}) {
    EXPECT_EQ(membership(spec, QPoint::make(h, k), ex).member(), membership(spec, QPoint::make(-k, h), ex).member());
  }
}
