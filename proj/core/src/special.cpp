#include "qm/special.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <type_traits>

namespace qm {

namespace {

template <class R>
R pi_v() {
  return boost::math::constants::pi<R>();
}

constexpr int kLaguerreNodes = 40;

struct LaguerreRule {
  std::array<double, kLaguerreNodes> x{}, w{};
  LaguerreRule() {
    // Golub-Welsch on the Jacobi matrix of the Laguerre weight
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(kLaguerreNodes, kLaguerreNodes);
    for (int i = 0; i < kLaguerreNodes; ++i) {
      J(i, i) = 2.0 * i + 1.0;
      if (i + 1 < kLaguerreNodes) J(i, i + 1) = J(i + 1, i) = i + 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    for (int i = 0; i < kLaguerreNodes; ++i) {
      x[i] = es.eigenvalues()(i);
      double v0 = es.eigenvectors()(0, i);
      w[i] = v0 * v0;
    }
  }
};

const LaguerreRule& laguerre() {
  static const LaguerreRule rule;
  return rule;
}

// arctan form: closed half-line integral minus the [0,1] piece
template <class R, unsigned N>
R piece_arctan(R a, R b) {
  using std::abs;
  using std::atan;
  using std::exp;
  const R pi = pi_v<R>();
  const R sp = boost::math::constants::root_pi<R>();
  R ab = abs(b), aa = abs(a);
  R pa2 = pi * a * a;
  auto f = [&](R w) { return exp(-pa2 * w * w) * boost::math::erfc(sp * ab * w); };
  R inner = boost::math::quadrature::gauss<R, N>::integrate(f, R(0), R(1));
  return 2 * sgn(b) * (sgn(a) * atan(aa / ab) / pi - a * inner);
}

double piece_laguerre(double a, double b) {
  const double pi = pi_v<double>();
  const double sp = std::sqrt(pi);
  double ab = std::abs(b);
  double c = pi * (a * a + b * b);
  const auto& L = laguerre();
  double acc = 0;
  for (int i = kLaguerreNodes - 1; i >= 0; --i) {
    double w = std::sqrt(1.0 + L.x[i] / c);
    acc += L.w[i] * erfcx(sp * ab * w) / w;
  }
  return 2 * sgn(b) * a * std::exp(-c) / (2 * c) * acc;
}

template <class R>
R mz(R u) {
  return u == 0 ? R(0) : erf_M(u);
}

}  // namespace

template <class R>
cplx<R> unit_root(long long num, long long den) {
  using std::cos;
  using std::sin;
  long long r = num % den;
  if (r < 0) r += den;
  R ang = 2 * pi_v<R>() * R(r) / R(den);
  return {cos(ang), sin(ang)};
}

template <class R>
R erf_E(R u) {
  return boost::math::erf(boost::math::constants::root_pi<R>() * u);
}

template <class R>
R erf_M(R u) {
  using std::abs;
  if (u == 0) throw std::domain_error("M(0) is undefined");
  return -sgn(u) * boost::math::erfc(boost::math::constants::root_pi<R>() * abs(u));
}

template <class R>
R erfcx(R x) {
  using std::exp;
  if (x < 0) throw std::domain_error("erfcx expects x >= 0");
  if (x <= 26) {
    if constexpr (std::is_same_v<R, double>) {
      double x2 = x * x;
      double err = std::fma(x, x, -x2);
      return std::exp(x2) * (1 + err) * std::erfc(x);
    } else {
      return exp(x * x) * boost::math::erfc(x);
    }
  }
  // Laplace continued fraction, backward evaluation
  R f = x;
  for (int k = 60; k >= 1; --k) f = x + R(k) / 2 / f;
  return 1 / (boost::math::constants::root_pi<R>() * f);
}

template <class R>
R m2_piece(R a, R b) {
  if (a == 0 || b == 0) return R(0);
  R c = pi_v<R>() * (a * a + b * b);
  if constexpr (std::is_same_v<R, double>) {
    if (c <= 4) return piece_arctan<double, 20>(a, b);
    return piece_laguerre(a, b);
  } else {
    if (c <= 8) return piece_arctan<R, 30>(a, b);
    if (c <= 32) return piece_arctan<R, 40>(a, b);
    return R(piece_laguerre(static_cast<double>(a), static_cast<double>(b)));
  }
}

template <class R>
R erf_M2_x(R kappa, R x1, R x2) {
  using std::atan;
  using std::sqrt;
  if (x1 == 0 && x2 == 0) return 2 * atan(kappa) / pi_v<R>();
  R rk = sqrt(1 + kappa * kappa);
  R u2 = x2;
  R u1 = x1 + kappa * x2;
  R p = (u2 + kappa * u1) / rk;
  R r = x1 / rk;
  return m2_piece<R>(u1, u2) + m2_piece<R>(p, r);
}

template <class R>
R erf_M2(R kappa, R u1, R u2) {
  return erf_M2_x<R>(kappa, u1 - kappa * u2, u2);
}

template <class R>
R erf_E2(R kappa, R u1, R u2) {
  using std::sqrt;
  R rk = sqrt(1 + kappa * kappa);
  R x1 = u1 - kappa * u2;
  R p = (u2 + kappa * u1) / rk;
  return erf_M2_x<R>(kappa, x1, u2) + sgn(u2) * mz(u1) + sgn(x1) * mz(p) + sgn(u1) * sgn(u2 + kappa * u1);
}

template <class R>
R erf_M2_star_x(R kappa, R x1, R x2, int side1, int side2) {
  using std::atan;
  using std::sqrt;
  R rk = sqrt(1 + kappa * kappa);
  if (x1 != 0 && x2 != 0) return erf_M2_x<R>(kappa, x1, x2);
  if (x1 == 0 && x2 != 0) return erf_M2_x<R>(kappa, x1, x2) - R(side1) * erf_M(rk * x2);
  if (x2 == 0 && x1 != 0) return erf_M2_x<R>(kappa, x1, x2) - R(side2) * erf_M(x1);
  return R(side1 * side2) + 2 * atan(kappa) / pi_v<R>();
}

template <class R>
R erf_derivative(DerivKind kind, R kappa, R u1, R u2) {
  using std::exp;
  using std::sqrt;
  const R pi = pi_v<R>();
  R rk = sqrt(1 + kappa * kappa);
  R p = (u2 + kappa * u1) / rk;
  R q = (u1 - kappa * u2) / rk;
  R gp = exp(-pi * p * p);
  switch (kind) {
    case DerivKind::M2_10:
      return 2 * exp(-pi * u1 * u1) * erf_M(u2) + 2 * kappa / rk * gp * erf_M(q);
    case DerivKind::M2_01:
      return 2 / rk * gp * erf_M(q);
    case DerivKind::E2_10:
      return 2 * exp(-pi * u1 * u1) * erf_E(u2) + 2 * kappa / rk * gp * erf_E(q);
    case DerivKind::E2_01:
      return 2 / rk * gp * erf_E(q);
  }
  return R(0);
}

#define QM_INSTANTIATE(R)                                              \
  template cplx<R> unit_root<R>(long long, long long);                 \
  template R erf_E<R>(R);                                              \
  template R erf_M<R>(R);                                              \
  template R erfcx<R>(R);                                              \
  template R m2_piece<R>(R, R);                                        \
  template R erf_M2_x<R>(R, R, R);                                     \
  template R erf_M2<R>(R, R, R);                                       \
  template R erf_E2<R>(R, R, R);                                       \
  template R erf_M2_star_x<R>(R, R, R, int, int);                      \
  template R erf_derivative<R>(DerivKind, R, R, R);

QM_INSTANTIATE(double)
QM_INSTANTIATE(xreal)

}  // namespace qm
