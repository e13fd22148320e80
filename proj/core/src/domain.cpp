#include "qm/domain.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qm {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      i64 n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    i64 n = std::stoll(ns, &used);
    if (used != ns.size()) throw std::invalid_argument(text);
    i64 d = std::stoll(ds, &used);
    if (used != ds.size() || d == 0) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

i64 floor_of(const Rational& r) {
  i64 n = r.numerator(), d = r.denominator();
  i64 q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

double QuadForm::lambda_min() const {
  double p = 0.5 * (a1 + a3);
  double q = std::sqrt(0.25 * double(a1 - a3) * double(a1 - a3) + 0.25 * double(a2) * double(a2));
  return p - q;
}

ShiftPair ShiftPair::from_alpha(const Rational& alpha1, const Rational& alpha2, i64 s) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  auto split = [s](const Rational& a, i64& r, i64& x) {
    Rational n = a * Rational(s);
    if (n.denominator() != 1)
      throw std::invalid_argument("alpha " + to_string(a) + " is not in Z[1/" + std::to_string(s) + "]");
    i64 ni = n.numerator();
    i64 m = ((ni % s) + s) % s;
    if (2 * m >= s) m -= s;
    x = m;
    r = (ni - m) / s;
  };
  ShiftPair p;
  p.s = s;
  split(alpha1, p.r1, p.x1);
  split(alpha2, p.r2, p.x2);
  return p;
}

std::string to_string(const ShiftPair& a) {
  return "(" + to_string(a.alpha1()) + "," + to_string(a.alpha2()) + ")";
}

std::vector<Violation> validate_family(const FamilySpec& spec) {
  std::vector<Violation> out;
  const auto& f = spec.form;
  if (f.a1 < 1 || f.a2 < 1 || f.a3 < 1)
    out.push_back({"form coefficients not positive", "need a1, a2, a3 >= 1"});
  if (std::gcd(std::gcd(f.a1, f.a2), f.a3) != 1)
    out.push_back({"form not primitive", "gcd(a1,a2,a3) != 1"});
  if (f.D() <= 0) out.push_back({"form not positive definite", "D = " + std::to_string(f.D())});
  if (spec.s < 1) {
    out.push_back({"s not positive", "s = " + std::to_string(spec.s)});
    return out;
  }
  if (spec.jstar.empty()) out.push_back({"jstar empty", ""});
  Rational total(0);
  for (const auto& w : spec.jstar) {
    const auto& a = w.alpha;
    if (a.s != spec.s) {
      out.push_back({"shift denominator mismatch", to_string(a)});
      continue;
    }
    if (w.eps == Rational(0)) out.push_back({"weight zero", to_string(a)});
    if (spec.s != 1 && a.integral()) out.push_back({"alpha in Z^2", to_string(a)});
    if (std::gcd(a.x1, spec.s) != 1 && std::gcd(a.x2, spec.s) != 1)
      out.push_back({"s not minimal", to_string(a) + " has no coordinate coprime to s"});
    total += w.eps;
  }
  // each alpha and its reflection carry the same weight, so the sum over J is twice this
  if (!spec.jstar.empty() && total != Rational(0))
    out.push_back({"sum of epsilon nonzero", "sum over J = " + to_string(Rational(2) * total)});
  return out;
}

WeightedShift reflect(const WeightedShift& w) {
  const auto& a = w.alpha;
  return {ShiftPair::from_alpha(Rational(1) - a.alpha1(), Rational(1) - a.alpha2(), a.s), w.eps};
}

DerivedSets derived_sets(const FamilySpec& spec) {
  auto bad = validate_family(spec);
  if (!bad.empty()) throw std::invalid_argument("invalid family: " + bad.front().condition + " " + bad.front().detail);
  DerivedSets d;
  d.J = spec.jstar;
  for (const auto& w : spec.jstar) d.J.push_back(reflect(w));
  for (const auto& w : spec.jstar) {
    if (w.alpha.x1 == 0) d.J1.push_back(w);
    if (w.alpha.x2 == 0) d.J2.push_back(w);
  }
  return d;
}

i64 g_of(const QuadForm& form, i64 x1, i64 x2) {
  if (x1 == 0 && x2 == 0) return 1;
  i64 u = 2 * form.a1 * x1 + form.a2 * x2;
  i64 v = form.a2 * x1 + 2 * form.a3 * x2;
  return std::gcd(u, v);
}

QPoint QPoint::make(i64 h, i64 k) {
  if (k == 0) throw std::invalid_argument("denominator zero");
  if (k < 0) {
    h = -h;
    k = -k;
  }
  i64 g = std::gcd(h, k);
  if (g == 0) g = 1;
  return {h / g, k / g};
}

i64 QPoint::delta(i64 s) const { return std::gcd(h, s); }
i64 QPoint::gamma(i64 s) const { return std::gcd(k, s); }

std::string QPoint::str() const { return std::to_string(h) + "/" + std::to_string(k); }

QPoint parse_point(const std::string& text) {
  Rational r = parse_rational(text);
  return QPoint::make(r.numerator(), r.denominator());
}

FamilySpec canonical_representatives(const FamilySpec& spec) {
  FamilySpec out = spec;
  auto shift = [](const Rational& a) {
    i64 c = -floor_of(-a);  // ceil
    return a - Rational(c) + Rational(1);
  };
  for (auto& w : out.jstar)
    w.alpha = ShiftPair::from_alpha(shift(w.alpha.alpha1()), shift(w.alpha.alpha2()), w.alpha.s);
  return out;
}

}  // namespace qm
