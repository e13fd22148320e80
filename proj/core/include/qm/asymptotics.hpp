#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qm/bernoulli.hpp"
#include "qm/domain.hpp"
#include "qm/precision.hpp"

namespace qm {

// polynomial in (x1, x2) with integer coefficients, keyed by exponent pair
using IntPoly = std::map<std::pair<int, int>, BigInt>;

// partial derivatives of exp(-Q(x)) written as P(x) exp(-Q(x))
class ExpQDerivatives {
 public:
  explicit ExpQDerivatives(const QuadForm& form) : form_(form) {}

  IntPoly poly(int n1, int n2) const;
  BigInt at_origin(int n1, int n2) const;
  double value(int n1, int n2, double x1, double x2) const;
  // int_0^inf d2^n exp(-Q)(x1, 0) dx1
  template <class R>
  R axis2_integral(int n) const;
  // int_0^inf d1^n exp(-Q)(0, x2) dx2
  template <class R>
  R axis1_integral(int n) const;
  // int over the closed first quadrant of exp(-Q)
  template <class R>
  R quadrant_integral() const;

 private:
  QuadForm form_;
};

// int_0^inf x^j exp(-a x^2) dx
template <class R>
R gaussian_moment(int j, R a);

struct SmoothFunction1D {
  std::function<double(int)> derivative_at_zero;
  double integral = 0;  // int_0^inf f
  int max_order = 64;
};

// sum_{m>=0} f((m + alpha) t) ~ main / t + sum_n corrections[n] t^n
struct EM1D {
  double main = 0;
  std::vector<double> corrections;
  double evaluate(double t) const;
};

EM1D em1d(const SmoothFunction1D& f, const Rational& alpha, int order);

struct SmoothFunction2D {
  std::function<double(int, int)> partial_at_origin;
  std::function<double(int)> axis1_integral;  // int_0^inf d1^n f(0, x2) dx2
  std::function<double(int)> axis2_integral;  // int_0^inf d2^n f(x1, 0) dx1
  double integral = 0;
  int max_order = 64;
};

// sum_{m in N0^2} f((m + alpha) T) ~ main / T^2 + sum axis1[n] T^(n-1) + sum axis2[n] T^(n-1)
//   + sum corner[n1][n2] T^(n1+n2)
struct EM2D {
  double main = 0;
  std::vector<double> axis1, axis2;
  std::vector<std::vector<double>> corner;
  double evaluate(double T) const;
};

EM2D em2d(const SmoothFunction2D& f, const Rational& alpha1, const Rational& alpha2, int order);

SmoothFunction2D exp_minus_q(const QuadForm& form);

enum class Side { F, E };
enum class AssemblyMode { shortcut, full };

struct AsymptoticSeries {
  QPoint point;
  int order = 0;
  std::vector<cplx<double>> coeffs;      // a(0..M)
  std::vector<cplx<xreal>> coeffs_ext;   // same at working precision
  std::vector<cplx<double>> half_coeffs; // slot j is t^(j - 1/2), j = 0..M+1
  cplx<double> growing_term;             // coefficient of 1/t
  Side side = Side::F;
  AssemblyMode mode = AssemblyMode::full;

  cplx<double> partial_sum(double t, int upto) const;
  cplx<xreal> partial_sum_ext(xreal t, int upto) const;
};

class NonMemberError : public std::runtime_error {
 public:
  NonMemberError(const std::string& what, cplx<double> growing)
      : std::runtime_error(what), growing_(growing) {}
  cplx<double> growing_term() const { return growing_; }

 private:
  cplx<double> growing_;
};

struct ExpandOptions {
  AssemblyMode mode = AssemblyMode::shortcut;
  bool allow_nonmember = false;
};

// F(exp(2 pi i h/k - t)) ~ sum a(m) t^m
AsymptoticSeries expand_F(const FamilySpec& spec, const QPoint& p, int M, const ExpandOptions& opt = {});
// E(h/k + i t / 2 pi) ~ sum a_{-h,k}(m) (-t)^m
AsymptoticSeries expand_E(const FamilySpec& spec, const QPoint& p, int M, const ExpandOptions& opt = {});

// even derivatives at 0 of M(sqrt(2 a / pi) x) exp(a x^2), from the Taylor product
double boundary_even_derivative(i64 a, int m);
// (2m)! (-a)^m / m!
double gaussian_even_derivative(i64 a, int m);

struct IdentityCheck {
  double lhs = 0;
  double rhs = 0;
  double residual() const { return std::abs(lhs - rhs); }
};

// int_0^inf d2^(2n+1) [F4 + F4~](x1, 0) dx1 against (-1)^n int_0^inf d2^(2n+1) exp(-Q)(x1, 0) dx1
IdentityCheck axis_identity_check(const QuadForm& form, int n);

}  // namespace qm
