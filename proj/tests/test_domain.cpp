#include <gtest/gtest.h>

#include "qm/domain.hpp"
#include "qm/fixtures.hpp"

using namespace qm;

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x/2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}

TEST(Rational, FloorOfNegatives) {
  EXPECT_EQ(floor_of(Rational(-1, 4)), -1);
  EXPECT_EQ(floor_of(Rational(5, 4)), 1);
  EXPECT_EQ(floor_of(Rational(-2)), -2);
}

TEST(ShiftPair, CenteredResidue) {
  auto a = ShiftPair::from_alpha(Rational(1, 4), Rational(-1, 2), 4);
  EXPECT_EQ(a.x1, 1);
  EXPECT_EQ(a.r1, 0);
  EXPECT_EQ(a.x2, -2);
  EXPECT_EQ(a.r2, 0);
  auto b = ShiftPair::from_alpha(Rational(7, 4), Rational(3, 4), 4);
  EXPECT_EQ(b.r1, 2);
  EXPECT_EQ(b.x1, -1);
  EXPECT_EQ(b.alpha1(), Rational(7, 4));
  EXPECT_THROW(ShiftPair::from_alpha(Rational(1, 3), Rational(0), 4), std::invalid_argument);
}

TEST(Family, RunningExampleValid) {
  const auto spec = running_example();
  EXPECT_TRUE(validate_family(spec).empty());
  EXPECT_EQ(spec.form.D(), 7);
  const auto d = derived_sets(spec);
  EXPECT_EQ(d.J.size(), 4u);
  EXPECT_TRUE(d.J1.empty());
  EXPECT_TRUE(d.J2.empty());
  EXPECT_EQ(d.J[2].alpha.alpha1(), Rational(3, 4));
  EXPECT_EQ(d.J[3].alpha.alpha2(), Rational(3, 2));
}

TEST(Family, ViolationsAreNamed) {
  auto unbalanced = make_spec(2, 1, 1, 4, {{{"1/4", "1/4"}, "1"}, {{"1/4", "-2/4"}, "-1/2"}});
  auto v = validate_family(unbalanced);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].condition, "sum of epsilon nonzero");
  EXPECT_THROW(derived_sets(unbalanced), std::invalid_argument);

  auto imprimitive = make_spec(2, 2, 2, 4, {{{"1/4", "1/4"}, "1"}, {{"1/4", "-2/4"}, "-1"}});
  bool named = false;
  for (const auto& x : validate_family(imprimitive)) named |= x.condition == "form not primitive";
  EXPECT_TRUE(named);

  auto lattice = make_spec(2, 1, 1, 4, {{{"1", "1"}, "1"}, {{"1/4", "1/4"}, "-1"}});
  named = false;
  for (const auto& x : validate_family(lattice)) named |= x.condition == "alpha in Z^2";
  EXPECT_TRUE(named);
}

TEST(Family, FixturesValidate) {
  for (const auto& f : all_fixtures()) EXPECT_TRUE(validate_family(f.spec).empty()) << f.name;
}

TEST(QPoint, Reduction) {
  auto p = QPoint::make(-2, -4);
  EXPECT_EQ(p.h, 1);
  EXPECT_EQ(p.k, 2);
  auto z = QPoint::make(0, 5);
  EXPECT_EQ(z.h, 0);
  EXPECT_EQ(z.k, 1);
  EXPECT_EQ(parse_point("6/4").str(), "3/2");
  EXPECT_EQ(QPoint::make(6, 9).delta(4), 2);
  EXPECT_EQ(QPoint::make(6, 8).gamma(4), 4);
  EXPECT_THROW(QPoint::make(1, 0), std::invalid_argument);
}

TEST(Family, CanonicalRepresentatives) {
  const auto c = canonical_representatives(running_example());
  for (const auto& w : c.jstar) {
    EXPECT_GT(w.alpha.alpha1(), Rational(0));
    EXPECT_LE(w.alpha.alpha1(), Rational(1));
    EXPECT_GT(w.alpha.alpha2(), Rational(0));
    EXPECT_LE(w.alpha.alpha2(), Rational(1));
  }
  EXPECT_EQ(c.jstar[1].alpha.alpha2(), Rational(1, 2));
}

TEST(Family, GOfRunningExample) {
  const auto spec = running_example();
  for (const auto& w : derived_sets(spec).J) EXPECT_EQ(g_of(spec, w.alpha), 1);
}
