#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qm/rational.hpp"

namespace qm {

using i64 = std::int64_t;

struct QuadForm {
  i64 a1 = 1, a2 = 1, a3 = 1;

  i64 D() const { return 4 * a1 * a3 - a2 * a2; }
  Rational value(const Rational& x1, const Rational& x2) const {
    return Rational(a1) * x1 * x1 + Rational(a2) * x1 * x2 + Rational(a3) * x2 * x2;
  }
  i64 value(i64 x1, i64 x2) const { return a1 * x1 * x1 + a2 * x1 * x2 + a3 * x2 * x2; }
  template <class R>
  R eval(R x1, R x2) const {
    return R(a1) * x1 * x1 + R(a2) * x1 * x2 + R(a3) * x2 * x2;
  }
  // smallest eigenvalue of [[a1, a2/2], [a2/2, a3]]
  double lambda_min() const;
};

// alpha_j = r_j + x_j / s with -s/2 <= x_j < s/2
struct ShiftPair {
  i64 r1 = 0, r2 = 0;
  i64 x1 = 0, x2 = 0;
  i64 s = 1;

  static ShiftPair from_alpha(const Rational& alpha1, const Rational& alpha2, i64 s);
  Rational alpha1() const { return Rational(r1) + Rational(x1, s); }
  Rational alpha2() const { return Rational(r2) + Rational(x2, s); }
  // s * alpha, always integral
  i64 n1() const { return r1 * s + x1; }
  i64 n2() const { return r2 * s + x2; }
  bool integral() const { return x1 == 0 && x2 == 0; }
  bool operator==(const ShiftPair&) const = default;
};

struct WeightedShift {
  ShiftPair alpha;
  Rational eps;
};

struct FamilySpec {
  QuadForm form;
  i64 s = 1;
  std::vector<WeightedShift> jstar;
};

struct Violation {
  std::string condition;
  std::string detail;
};

std::vector<Violation> validate_family(const FamilySpec& spec);

struct DerivedSets {
  std::vector<WeightedShift> J;   // jstar followed by the reflections 1 - alpha
  std::vector<WeightedShift> J1;  // alpha_1 integral
  std::vector<WeightedShift> J2;  // alpha_2 integral
};

// throws std::invalid_argument when the spec does not validate
DerivedSets derived_sets(const FamilySpec& spec);

WeightedShift reflect(const WeightedShift& w);

i64 g_of(const QuadForm& form, i64 x1, i64 x2);
inline i64 g_of(const FamilySpec& spec, const ShiftPair& a) { return g_of(spec.form, a.x1, a.x2); }

struct QPoint {
  i64 h = 0;
  i64 k = 1;

  // reduces and moves the sign to h; throws on k == 0
  static QPoint make(i64 h, i64 k);
  i64 delta(i64 s) const;
  i64 gamma(i64 s) const;
  QPoint negated() const { return {-h, k}; }
  std::string str() const;
};

QPoint parse_point(const std::string& text);

// each alpha moved by an integer vector into (0,1]^2; weights untouched
FamilySpec canonical_representatives(const FamilySpec& spec);

std::string to_string(const ShiftPair& a);

}  // namespace qm
