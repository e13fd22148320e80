#include <gtest/gtest.h>

#include "qm/fixtures.hpp"
#include "spec_io.hpp"

using namespace qm;

TEST(SpecIO, RoundTrip) {
  const auto spec = running_example();
  const auto j = io::spec_to_json(spec);
  const auto back = io::spec_from_json(j);
  EXPECT_EQ(back.form.a1, 2);
  EXPECT_EQ(back.s, 4);
  ASSERT_EQ(back.jstar.size(), spec.jstar.size());
  for (std::size_t i = 0; i < back.jstar.size(); ++i) {
    EXPECT_EQ(back.jstar[i].alpha, spec.jstar[i].alpha);
    EXPECT_EQ(back.jstar[i].eps, spec.jstar[i].eps);
  }
  EXPECT_EQ(io::spec_to_json(back).dump(), j.dump());
}

TEST(SpecIO, AcceptsIntegersAndStrings) {
  const auto j = io::json::parse(R"({"form":[1,1,1],"s":3,"jstar":[{"alpha":["1/3",1],"eps":-1},{"alpha":["1/3","1/3"],"eps":"1"}]})");
  const auto spec = io::spec_from_json(j);
  EXPECT_EQ(spec.jstar[0].alpha.alpha2(), Rational(1));
  EXPECT_EQ(spec.jstar[0].eps, Rational(-1));
}

TEST(SpecIO, RejectsMalformed) {
  EXPECT_ANY_THROW(io::spec_from_json(io::json::parse(R"({"form":[1,1],"s":3,"jstar":[]})")));
  EXPECT_ANY_THROW(io::spec_from_json(io::json::parse(R"({"s":3})")));
}

TEST(SpecIO, ParseTau) {
  EXPECT_EQ(io::parse_tau("i"), std::complex<double>(0, 1));
  EXPECT_EQ(io::parse_tau("2i"), std::complex<double>(0, 2));
  EXPECT_EQ(io::parse_tau("0.25+0.8i"), std::complex<double>(0.25, 0.8));
  EXPECT_EQ(io::parse_tau("1/3+1/2i"), std::complex<double>(1.0 / 3, 0.5));
  EXPECT_EQ(io::parse_tau("-0.5-i"), std::complex<double>(-0.5, -1));
  EXPECT_ANY_THROW(io::parse_tau("abc"));
}

TEST(SpecIO, TauStringRoundTrips) {
  const std::complex<double> z(1.0 / 3, 0.1);
  EXPECT_EQ(io::parse_tau(io::tau_string(z)), z);
}
