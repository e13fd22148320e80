#include <gtest/gtest.h>

#include <cmath>

#include "qm/asymptotics.hpp"
#include "qm/fixtures.hpp"
#include "qm/partial_theta.hpp"

using namespace qm;

TEST(Gaussian, Moments) {
  const double pi = 3.14159265358979323846;
  EXPECT_NEAR(gaussian_moment<double>(0, 1.0), std::sqrt(pi) / 2, 1e-15);
  EXPECT_NEAR(gaussian_moment<double>(1, 2.0), 0.25, 1e-15);
  EXPECT_NEAR(gaussian_moment<double>(2, 1.0), std::sqrt(pi) / 4, 1e-15);
}

TEST(ExpQ, DerivativePolynomials) {
  const QuadForm f{2, 1, 1};
  const ExpQDerivatives d(f);
  EXPECT_EQ(d.at_origin(0, 0), BigInt(1));
  EXPECT_EQ(d.at_origin(2, 0), BigInt(-4));
  EXPECT_EQ(d.at_origin(1, 1), BigInt(-1));
  EXPECT_EQ(d.at_origin(0, 2), BigInt(-2));
  EXPECT_EQ(d.at_origin(1, 0), BigInt(0));
  const double h = 1e-5, x1 = 0.3, x2 = -0.2;
  auto e = [&](double a, double b) { return std::exp(-f.eval(a, b)); };
  EXPECT_NEAR(d.value(1, 0, x1, x2), (e(x1 + h, x2) - e(x1 - h, x2)) / (2 * h), 1e-8);
  EXPECT_NEAR(d.value(0, 1, x1, x2), (e(x1, x2 + h) - e(x1, x2 - h)) / (2 * h), 1e-8);
}

TEST(EulerMaclaurin, OneDimensionalGaussian) {
  // sum_{m>=0} exp(-((m + 1/3) t)^2) against its expansion
  SmoothFunction1D f;
  f.integral = std::sqrt(3.14159265358979323846) / 2;
  f.derivative_at_zero = [](int n) { return n % 2 ? 0.0 : gaussian_even_derivative(1, n / 2); };
  const auto em = em1d(f, Rational(1, 3), 6);
  for (double t : {0.05, 0.02}) {
    double direct = 0;
    for (int m = 0; m < 4000; ++m) direct += std::exp(-std::pow((m + 1.0 / 3) * t, 2));
    EXPECT_NEAR(em.evaluate(t), direct, 1e-9);
  }
}

TEST(EulerMaclaurin, TwoDimensionalQuadrant) {
  const QuadForm q{2, 1, 1};
  const auto em = em2d(exp_minus_q(q), Rational(1, 4), Rational(1, 2), 4);
  const double T = 0.05;
  double direct = 0;
  for (int m1 = 0; m1 < 400; ++m1)
    for (int m2 = 0; m2 < 400; ++m2) direct += std::exp(-q.eval((m1 + 0.25) * T, (m2 + 0.5) * T));
  EXPECT_NEAR(em.evaluate(T), direct, 1e-6);
}

TEST(Expansion, RunningExampleAtZero) {
  const auto a = expand_F(running_example(), QPoint::make(0, 1), 3);
  ASSERT_EQ(a.coeffs.size(), 4u);
  const double expect[] = {-0.609375, 0.136596679688, -0.012187957764, -0.000121518970};
  for (int m = 0; m < 4; ++m) {
    EXPECT_NEAR(a.coeffs[m].real(), expect[m], 1e-11) << m;
    EXPECT_NEAR(a.coeffs[m].imag(), 0, 1e-14) << m;
  }
  EXPECT_LT(std::abs(a.growing_term), 1e-12);
}

TEST(Expansion, ShortcutMatchesFull) {
  const auto spec = running_example();
  for (auto [h, k] : {std::pair{0, 1}, {1, 2}, {1, 3}, {2, 5}}) {
    const auto p = QPoint::make(h, k);
    const auto a = expand_F(spec, p, 5, {AssemblyMode::shortcut});
    const auto b = expand_F(spec, p, 5, {AssemblyMode::full});
    for (int m = 0; m <= 5; ++m) EXPECT_LT(std::abs(a.coeffs[m] - b.coeffs[m]), 1e-12);
    for (auto c : a.half_coeffs) EXPECT_EQ(c, cplx<double>(0));
    for (auto c : b.half_coeffs) EXPECT_LT(std::abs(c), 1e-12);
  }
}

TEST(Expansion, MatchesFAtSmallT) {
  const auto spec = running_example();
  const auto p = QPoint::make(1, 2);
  const auto a = expand_F(spec, p, 3);
  EvalRequest r;
  r.spec = spec;
  r.point = p;
  r.t = 1e-3;
  EXPECT_LT(std::abs(eval_F<double>(r) - a.partial_sum(1e-3, 3)), 1e-6);
  EXPECT_LT(std::abs(eval_F<double>(r) - a.partial_sum(1e-3, 3)), std::abs(eval_F<double>(r) - a.partial_sum(1e-3, 2)));
}

TEST(Expansion, NonMemberRejected) {
  const auto spec = fixture_adversarial();
  bool threw = false;
  for (i64 k = 1; k <= 12 && !threw; ++k) {
    try {
      expand_F(spec, QPoint::make(1, k), 2);
    } catch (const NonMemberError& e) {
      threw = true;
      EXPECT_GT(std::abs(e.growing_term()), 1e-6);
    }
  }
  EXPECT_TRUE(threw);
}

TEST(Expansion, BoundaryDerivatives) {
  for (i64 a : {1, 2, 3})
    for (int m = 0; m <= 5; ++m) {
      const double g = std::tgamma(2 * m + 1) * std::pow(double(a), m) / std::tgamma(m + 1);
      EXPECT_NEAR(boundary_even_derivative(a, m), -g, 1e-9 * g);
      EXPECT_NEAR(gaussian_even_derivative(a, m), m % 2 ? -g : g, 1e-9 * g);
    }
}

TEST(Expansion, AxisIdentity) {
  for (int n = 0; n <= 1; ++n) {
    const auto c = axis_identity_check(QuadForm{2, 1, 1}, n);
    EXPECT_LT(c.residual(), 1e-5 * std::max(1.0, std::abs(c.rhs))) << n;
  }
  EXPECT_THROW(axis_identity_check(QuadForm{2, 1, 1}, 2), std::out_of_range);
}
