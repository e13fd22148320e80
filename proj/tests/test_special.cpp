#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

#include "qm/bernoulli.hpp"
#include "qm/special.hpp"

using namespace qm;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST(ErrorFunctions, IncompleteGammaIdentity) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int i = 0; i < 100; ++i) {
    const double u = U(rng);
    const double g = boost::math::tgamma(0.5, kPi * u * u) / std::sqrt(kPi);
    EXPECT_NEAR(erf_E<double>(u), sgn(u) * (1 - g), 1e-13);
    EXPECT_NEAR(erf_M<double>(u), -sgn(u) * g, 1e-13);
  }
}

TEST(ErrorFunctions, MAtZeroThrows) { EXPECT_THROW(erf_M<double>(0.0), std::domain_error); }

TEST(ErrorFunctions, ExtendedAgreesWithDouble) {
  for (double u : {-2.1, -0.3, 0.7, 1.9}) {
    EXPECT_NEAR(double(erf_M<xreal>(xreal(u))), erf_M<double>(u), 1e-15);
    EXPECT_NEAR(double(erf_M2<xreal>(xreal(0.4), xreal(u), xreal(0.6))), erf_M2<double>(0.4, u, 0.6), 1e-14);
  }
}

TEST(ErrorFunctions, Evenness) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(-2, 2);
  for (int i = 0; i < 100; ++i) {
    const double k = U(rng), u1 = U(rng), u2 = U(rng);
    EXPECT_NEAR(erf_M2<double>(k, u1, u2), erf_M2<double>(k, -u1, -u2), 1e-12);
    EXPECT_NEAR(erf_E2<double>(k, u1, u2), erf_E2<double>(k, -u1, -u2), 1e-12);
  }
}

TEST(ErrorFunctions, M2Decay) {
  for (double r : {1.0, 2.0, 3.0}) {
    const double u1 = 0.6 * r, u2 = -0.8 * r;
    EXPECT_LE(std::abs(erf_M2<double>(0.377, u1, u2)), 2 * std::exp(-kPi * r * r));
  }
}

TEST(ErrorFunctions, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.2, 1.5), S(-1, 1);
  const double h = 1e-5;
  int done = 0;
  while (done < 50) {
    const double k = S(rng), u1 = U(rng) * (S(rng) < 0 ? -1 : 1), u2 = U(rng) * (S(rng) < 0 ? -1 : 1);
    if (std::abs(u1 - k * u2) < 0.05) continue;
    auto check = [&](DerivKind kind, auto f, int dir) {
      const double a = dir == 0 ? (f(u1 + h, u2) - f(u1 - h, u2)) / (2 * h) : (f(u1, u2 + h) - f(u1, u2 - h)) / (2 * h);
      const double b = erf_derivative<double>(kind, k, u1, u2);
      EXPECT_NEAR(a, b, 1e-6 * std::max(1.0, std::abs(b)));
    };
    auto m2 = [&](double a, double b) { return erf_M2<double>(k, a, b); };
    auto e2 = [&](double a, double b) { return erf_E2<double>(k, a, b); };
    check(DerivKind::M2_10, m2, 0);
    check(DerivKind::M2_01, m2, 1);
    check(DerivKind::E2_10, e2, 0);
    check(DerivKind::E2_01, e2, 1);
    ++done;
  }
}

TEST(ErrorFunctions, StarJumpsAcrossLoci) {
  const double k = 0.377964473, rk = std::sqrt(1 + k * k), e = 1e-12;
  for (double y : {-1.3, -0.4, 0.5, 1.1}) {
    // locus x1 = 0
    EXPECT_NEAR(erf_M2_x<double>(k, e, y), erf_M2_star_x<double>(k, 0, y, +1), 1e-9);
    EXPECT_NEAR(erf_M2_x<double>(k, -e, y), erf_M2_star_x<double>(k, 0, y, -1), 1e-9);
    EXPECT_NEAR(erf_M2_x<double>(k, 0, y) - erf_M2_star_x<double>(k, 0, y, +1), erf_M<double>(rk * y), 1e-9);
    // locus x2 = 0
    EXPECT_NEAR(erf_M2_x<double>(k, y, e), erf_M2_star_x<double>(k, y, 0, 1, +1), 1e-9);
    EXPECT_NEAR(erf_M2_x<double>(k, y, -e), erf_M2_star_x<double>(k, y, 0, 1, -1), 1e-9);
    EXPECT_NEAR(erf_M2_x<double>(k, y, 0) - erf_M2_star_x<double>(k, y, 0, 1, +1), erf_M<double>(y), 1e-9);
  }
}

TEST(ErrorFunctions, Erfcx) {
  EXPECT_NEAR(erfcx<double>(0.0), 1.0, 1e-15);
  EXPECT_NEAR(erfcx<double>(30.0) * 30.0 * std::sqrt(kPi), 1.0, 1e-3);
}

TEST(UnitRoot, ReducedBeforeRounding) {
  const auto i = unit_root<double>(1, 4);
  EXPECT_NEAR(i.real(), 0.0, 1e-16);
  EXPECT_EQ(i.imag(), 1.0);
  EXPECT_EQ(unit_root<double>(-7, 3), unit_root<double>(2, 3));
  EXPECT_EQ(unit_root<double>(1000000007, 1000000000), unit_root<double>(7, 1000000000));
  EXPECT_NEAR(std::abs(unit_root<double>(2, 3) - std::polar(1.0, 4 * kPi / 3)), 0, 1e-15);
}

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli_number(2), BigRational(1, 6));
  EXPECT_EQ(bernoulli_number(4), BigRational(-1, 30));
  EXPECT_EQ(bernoulli_number(3), BigRational(0));
  EXPECT_EQ(bernoulli_poly(1, Rational(1, 4)), BigRational(-1, 4));
  EXPECT_THROW(bernoulli_poly(kBernoulliMaxOrder + 1, Rational(0)), std::out_of_range);
}

TEST(Bernoulli, ReflectionExact) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 17);
  for (int i = 0; i < 20; ++i) {
    const Rational x(num(rng), den(rng));
    for (unsigned m = 0; m <= 16; ++m) {
      const BigRational lhs = bernoulli_poly(m, Rational(1) - x);
      const BigRational rhs = (m % 2 ? -1 : 1) * bernoulli_poly(m, x);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(ErrorFunctions, E2AgainstQuadrature) {
  // E2(k; u) = int sgn(w) E(u2 + k w) exp(-pi (w - u1)^2) dw after the inner Gaussian integral
  boost::math::quadrature::gauss_kronrod<double, 61> gk;
  for (auto [k, u1, u2] : {std::tuple{0.5, 0.7, 1.1}, {0.377964473, -0.4, 0.9}, {-1.2, 0.3, -0.8}}) {
    auto f = [&](double w) { return erf_E<double>(u2 + k * w) * std::exp(-kPi * (w - u1) * (w - u1)); };
    const double q = gk.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-14) -
                     gk.integrate(f, -std::numeric_limits<double>::infinity(), 0.0, 15, 1e-14);
    EXPECT_NEAR(erf_E2<double>(k, u1, u2), q, 1e-12);
    const double x1 = u1 - k * u2, rk = std::sqrt(1 + k * k);
    const double rel = q - sgn(u2) * erf_M<double>(u1) - sgn(x1) * erf_M<double>((u2 + k * u1) / rk) -
                       sgn(u1) * sgn(u2 + k * u1);
    EXPECT_NEAR(erf_M2<double>(k, u1, u2), rel, 1e-12);
  }
}
