#pragma once

#include <stdexcept>

#include "qm/precision.hpp"

namespace qm {

struct ErfPoint2D {
  double kappa = 0;
  double u1 = 0;
  double u2 = 0;
};

template <class R>
inline R sgn(R x) {
  return x > 0 ? R(1) : (x < 0 ? R(-1) : R(0));
}
template <class R>
inline R sgn_star(R x) {
  return x < 0 ? R(-1) : R(1);
}

// E(u) = 2 int_0^u exp(-pi w^2) dw
template <class R>
R erf_E(R u);

// M(u) = E(u) - sgn(u); u == 0 throws std::domain_error
template <class R>
R erf_M(R u);

// exp(x^2) erfc(x) for x >= 0
template <class R>
R erfcx(R x);

// one half of the two-term M2 representation:
// 2 sgn(b) a int_1^inf exp(-pi a^2 w^2) erfc(sqrt(pi) |b| w) dw
template <class R>
R m2_piece(R a, R b);

template <class R>
R erf_M2(R kappa, R u1, R u2);

// same function addressed by x1 = u1 - kappa u2, x2 = u2; loci are tested on x exactly
template <class R>
R erf_M2_x(R kappa, R x1, R x2);

template <class R>
R erf_E2(R kappa, R u1, R u2);

// sgn replaced by sgn*; side1/side2 pick the one-sided limit used when x1 or x2 is zero
template <class R>
R erf_M2_star_x(R kappa, R x1, R x2, int side1 = 1, int side2 = 1);

template <class R>
R erf_M2_star(R kappa, R u1, R u2) {
  return erf_M2_star_x<R>(kappa, u1 - kappa * u2, u2);
}

enum class DerivKind { M2_10, M2_01, E2_10, E2_01 };

template <class R>
R erf_derivative(DerivKind kind, R kappa, R u1, R u2);

inline double erf_E2(const ErfPoint2D& p) { return erf_E2<double>(p.kappa, p.u1, p.u2); }
inline double erf_M2(const ErfPoint2D& p) { return erf_M2<double>(p.kappa, p.u1, p.u2); }
inline double erf_M2_star(const ErfPoint2D& p) { return erf_M2_star<double>(p.kappa, p.u1, p.u2); }
inline double erf_derivative(DerivKind kind, const ErfPoint2D& p) {
  return erf_derivative<double>(kind, p.kappa, p.u1, p.u2);
}

}  // namespace qm
