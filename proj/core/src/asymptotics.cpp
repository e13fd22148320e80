#include "qm/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "qm/quantum_set.hpp"
#include "qm/special.hpp"

namespace qm {

namespace {

IntPoly d1(const IntPoly& P, const QuadForm& f) {
  IntPoly out;
  for (const auto& [e, c] : P) {
    auto [i, j] = e;
    if (i > 0) out[{i - 1, j}] += c * i;
    out[{i + 1, j}] -= c * (2 * f.a1);
    out[{i, j + 1}] -= c * f.a2;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntPoly d2(const IntPoly& P, const QuadForm& f) {
  IntPoly out;
  for (const auto& [e, c] : P) {
    auto [i, j] = e;
    if (j > 0) out[{i, j - 1}] += c * j;
    out[{i + 1, j}] -= c * f.a2;
    out[{i, j + 1}] -= c * (2 * f.a3);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

template <class R>
R factorial(int n) {
  R r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

IntPoly ExpQDerivatives::poly(int n1, int n2) const {
  IntPoly P{{{0, 0}, BigInt(1)}};
  for (int i = 0; i < n1; ++i) P = d1(P, form_);
  for (int i = 0; i < n2; ++i) P = d2(P, form_);
  return P;
}

BigInt ExpQDerivatives::at_origin(int n1, int n2) const {
  auto P = poly(n1, n2);
  auto it = P.find({0, 0});
  return it == P.end() ? BigInt(0) : it->second;
}

double ExpQDerivatives::value(int n1, int n2, double x1, double x2) const {
  double acc = 0;
  for (const auto& [e, c] : poly(n1, n2))
    acc += c.convert_to<double>() * std::pow(x1, e.first) * std::pow(x2, e.second);
  return acc * std::exp(-form_.eval(x1, x2));
}

template <class R>
R gaussian_moment(int j, R a) {
  using std::pow;
  R g = boost::math::tgamma(R(j + 1) / 2);
  return g / (2 * pow(a, R(j + 1) / 2));
}

template <class R>
R ExpQDerivatives::axis2_integral(int n) const {
  R acc = 0;
  for (const auto& [e, c] : poly(0, n))
    if (e.second == 0) acc += big_to_real<R>(c) * gaussian_moment<R>(e.first, R(form_.a1));
  return acc;
}

template <class R>
R ExpQDerivatives::axis1_integral(int n) const {
  R acc = 0;
  for (const auto& [e, c] : poly(n, 0))
    if (e.first == 0) acc += big_to_real<R>(c) * gaussian_moment<R>(e.second, R(form_.a3));
  return acc;
}

template <class R>
R ExpQDerivatives::quadrant_integral() const {
  using std::acos;
  using std::sqrt;
  R c = R(form_.a2) / (2 * sqrt(R(form_.a1) * R(form_.a3)));
  return acos(c) / sqrt(R(form_.D()));
}

double EM1D::evaluate(double t) const {
  double acc = main / t, p = 1;
  for (double c : corrections) acc += c * p, p *= t;
  return acc;
}

EM1D em1d(const SmoothFunction1D& f, const Rational& alpha, int order) {
  if (order > f.max_order) throw std::out_of_range("derivative order unavailable");
  EM1D r;
  r.main = f.integral;
  for (int n = 0; n <= order; ++n) {
    double b = to_real<double>(bernoulli_poly(n + 1, alpha)) / factorial<double>(n + 1);
    r.corrections.push_back(-b * f.derivative_at_zero(n));
  }
  return r;
}

double EM2D::evaluate(double T) const {
  double acc = main / (T * T);
  for (std::size_t n = 0; n < axis1.size(); ++n) acc += (axis1[n] + axis2[n]) * std::pow(T, double(n) - 1);
  for (std::size_t a = 0; a < corner.size(); ++a)
    for (std::size_t b = 0; b < corner[a].size(); ++b) acc += corner[a][b] * std::pow(T, double(a + b));
  return acc;
}

EM2D em2d(const SmoothFunction2D& f, const Rational& alpha1, const Rational& alpha2, int order) {
  if (order > f.max_order) throw std::out_of_range("derivative order unavailable");
  EM2D r;
  r.main = f.integral;
  std::vector<double> b1(order + 1), b2(order + 1);
  for (int n = 0; n <= order; ++n) {
    b1[n] = to_real<double>(bernoulli_poly(n + 1, alpha1)) / factorial<double>(n + 1);
    b2[n] = to_real<double>(bernoulli_poly(n + 1, alpha2)) / factorial<double>(n + 1);
    r.axis1.push_back(-b1[n] * f.axis1_integral(n));
    r.axis2.push_back(-b2[n] * f.axis2_integral(n));
  }
  r.corner.assign(order + 1, {});
  for (int n1 = 0; n1 <= order; ++n1)
    for (int n2 = 0; n1 + n2 <= order; ++n2) r.corner[n1].push_back(b1[n1] * b2[n2] * f.partial_at_origin(n1, n2));
  return r;
}

SmoothFunction2D exp_minus_q(const QuadForm& form) {
  ExpQDerivatives d(form);
  SmoothFunction2D f;
  f.partial_at_origin = [d](int n1, int n2) { return d.at_origin(n1, n2).convert_to<double>(); };
  f.axis1_integral = [d](int n) { return d.axis1_integral<double>(n); };
  f.axis2_integral = [d](int n) { return d.axis2_integral<double>(n); };
  f.integral = d.quadrant_integral<double>();
  return f;
}

cplx<double> AsymptoticSeries::partial_sum(double t, int upto) const {
  cplx<double> acc = 0;
  double p = 1;
  for (int m = 0; m <= upto && m < int(coeffs.size()); ++m, p *= t) acc += coeffs[m] * p;
  return acc;
}

cplx<xreal> AsymptoticSeries::partial_sum_ext(xreal t, int upto) const {
  cplx<xreal> acc{};
  xreal p = 1;
  for (int m = 0; m <= upto && m < int(coeffs_ext.size()); ++m, p *= t) acc += coeffs_ext[m] * p;
  return acc;
}

namespace {

using X = xreal;
using CX = cplx<X>;

// accumulates coefficients keyed by the power of sqrt(t)
struct Slots {
  int lo = -2, hi;
  std::vector<CX> v;
  explicit Slots(int M) : hi(2 * M + 1), v(2 * M + 4) {}
  void add(int key, const CX& c) {
    if (key >= lo && key <= hi) v[key - lo] += c;
  }
  CX get(int key) const { return v[key - lo]; }
};

X bern(int n, const Rational& x) { return to_real<X>(bernoulli_poly(static_cast<unsigned>(n), x)); }

X kpow(X K, int e) {
  X r = 1;
  if (e >= 0)
    for (int i = 0; i < e; ++i) r *= K;
  else
    for (int i = 0; i < -e; ++i) r /= K;
  return r;
}

CX phase_of(i64 h, i64 mod, __int128 qint) {
  __int128 r = (static_cast<__int128>(h) * (qint % mod)) % mod;
  if (r < 0) r += mod;
  return unit_root<X>(static_cast<long long>(r), mod);
}

void add_two_dim(const FamilySpec& spec, const DerivedSets& sets, const QPoint& p, int M, bool full, Slots& out) {
  const i64 s = spec.s;
  const i64 K = p.k * s / p.delta(s);
  const i64 mod = p.k * s * s;
  const int top = 2 * M + 1;
  ExpQDerivatives dq(spec.form);
  std::vector<X> J1(top + 2), J2(top + 2);
  for (int n = 0; n <= top + 1; ++n) {
    J1[n] = dq.axis1_integral<X>(n);
    J2[n] = dq.axis2_integral<X>(n);
  }
  std::vector<std::vector<X>> Dn(top + 1, std::vector<X>(top + 1, X(0)));
  for (int a = 0; a <= top; ++a)
    for (int b = 0; a + b <= top; ++b) Dn[a][b] = big_to_real<X>(dq.at_origin(a, b));
  const X Iq = dq.quadrant_integral<X>();
  const X Kx = X(K);

  for (const auto& ws : sets.J) {
    const X eps = to_real<X>(ws.eps);
    for (i64 l1 = 0; l1 < K; ++l1) {
      const i64 X1 = s * l1 + ws.alpha.n1();
      const Rational b1(X1, s * K);
      std::vector<X> B1(top + 2);
      for (int n = 0; n <= top + 1; ++n) B1[n] = bern(n + 1, b1) / factorial<X>(n + 1);
      for (i64 l2 = 0; l2 < K; ++l2) {
        const i64 X2 = s * l2 + ws.alpha.n2();
        const Rational b2(X2, s * K);
        const CX ph = eps * phase_of(p.h, mod, spec.form.value(X1, X2));
        std::vector<X> B2(top + 2);
        for (int n = 0; n <= top + 1; ++n) B2[n] = bern(n + 1, b2) / factorial<X>(n + 1);
        out.add(-2, ph * (Iq / (Kx * Kx)));
        for (int n = 0; n <= top + 1; ++n) {
          if (!full && n % 2 == 0) continue;
          out.add(n - 1, -ph * (B2[n] * J2[n] + B1[n] * J1[n]) * kpow(Kx, n - 1));
        }
        for (int a = 0; a <= top; ++a)
          for (int b = 0; a + b <= top; ++b) {
            if (!full && (a + b) % 2 != 0) continue;
            out.add(a + b, ph * (B1[a] * B2[b] * Dn[a][b]) * kpow(Kx, a + b));
          }
      }
    }
    const auto& al = ws.alpha;
    if (al.integral() && al.n1() <= 0 && al.n2() <= 0) out.add(0, CX(-eps));
  }
}

// -1/2 eps sgn*(alpha_i) [ sum_{1-beta+N0} - sum_{beta+N0} ] zeta^{a j^2} exp(-t a j^2)
void add_one_dim(const FamilySpec& spec, const std::vector<WeightedShift>& set, bool first, const QPoint& p, int M,
                 bool full, Slots& out) {
  const i64 s = spec.s;
  const i64 K = p.k * s / p.delta(s);
  const i64 mod = p.k * s * s;
  const i64 a = first ? spec.form.a3 : spec.form.a1;
  const int top = 2 * M + 1;
  const X Kx = X(K);
  const X I1 = boost::math::constants::root_pi<X>() / (2 * sqrt(X(a)));
  for (const auto& ws : set) {
    const Rational sel = first ? ws.alpha.alpha1() : ws.alpha.alpha2();
    const i64 beta_num = first ? ws.alpha.n2() : ws.alpha.n1();
    const X coef = -to_real<X>(ws.eps) * sgn_star(to_double(sel)) / 2;
    for (int side = 0; side < 2; ++side) {
      const i64 bn = side == 0 ? s - beta_num : beta_num;  // s * shift
      const X sign = side == 0 ? X(1) : X(-1);
      for (i64 l = 0; l < K; ++l) {
        const i64 J = s * l + bn;
        const CX ph = coef * sign * phase_of(p.h, mod, static_cast<__int128>(a) * J * J);
        const Rational b(J, s * K);
        if (full) out.add(-1, ph * I1 / Kx);
        for (int n = 0; n <= top; n += full ? 1 : 2) {
          X deriv = 0;
          if (n % 2 == 0) {
            int m = n / 2;
            deriv = factorial<X>(n) / factorial<X>(m);
            for (int i = 0; i < m; ++i) deriv *= -X(a);
          }
          out.add(n, -ph * bern(n + 1, b) / factorial<X>(n + 1) * deriv * kpow(Kx, n));
        }
      }
      if (bn % s == 0 && bn <= 0) out.add(0, -coef * sign);
    }
  }
}

AsymptoticSeries assemble(const FamilySpec& spec, const QPoint& p, int M, const ExpandOptions& opt) {
  if (M < 0 || 2 * M + 2 >= int(kBernoulliMaxOrder)) throw std::out_of_range("expansion order unsupported");
  auto sets = derived_sets(spec);
  const i64 K = p.k * spec.s / p.delta(spec.s);
  if (K > 4000) throw std::out_of_range("period ks/delta exceeds 4000");
  const bool full = opt.mode == AssemblyMode::full;
  Slots slots(M);
  add_two_dim(spec, sets, p, M, full, slots);
  add_one_dim(spec, sets.J1, true, p, M, full, slots);
  add_one_dim(spec, sets.J2, false, p, M, full, slots);

  AsymptoticSeries out;
  out.point = p;
  out.order = M;
  out.mode = opt.mode;
  auto to_d = [](const CX& z) { return cplx<double>(static_cast<double>(z.real()), static_cast<double>(z.imag())); };
  out.growing_term = to_d(slots.get(-2));
  for (int m = 0; m <= M; ++m) {
    out.coeffs_ext.push_back(slots.get(2 * m));
    out.coeffs.push_back(to_d(slots.get(2 * m)));
  }
  for (int j = 0; j <= M + 1; ++j) out.half_coeffs.push_back(to_d(slots.get(2 * j - 1)));
  return out;
}

}  // namespace

AsymptoticSeries expand_F(const FamilySpec& spec, const QPoint& p, int M, const ExpandOptions& opt) {
  auto out = assemble(spec, p, M, opt);
  if (!opt.allow_nonmember && std::abs(main_term_sum(spec, p)) >= kVanishTol)
    throw NonMemberError("point " + p.str() + " is not in the quantum set", out.growing_term);
  return out;
}

AsymptoticSeries expand_E(const FamilySpec& spec, const QPoint& p, int M, const ExpandOptions& opt) {
  auto out = expand_F(spec, p.negated(), M, opt);
  out.point = p;
  out.side = Side::E;
  for (int m = 1; m <= M; m += 2) {
    out.coeffs[m] = -out.coeffs[m];
    out.coeffs_ext[m] = -out.coeffs_ext[m];
  }
  for (std::size_t j = 0; j < out.half_coeffs.size(); ++j) out.half_coeffs[j] = 0;
  out.growing_term = -out.growing_term;
  return out;
}

double gaussian_even_derivative(i64 a, int m) {
  double r = factorial<double>(2 * m) / factorial<double>(m);
  for (int i = 0; i < m; ++i) r *= -double(a);
  return r;
}

double boundary_even_derivative(i64 a, int m) {
  // Taylor coefficients of erf(sqrt(2a) x) - 1 and exp(a x^2), multiplied out to order 2m
  const int N = 2 * m;
  std::vector<double> f(N + 1, 0.0), g(N + 1, 0.0);
  f[0] = -1;
  const double c = std::sqrt(2.0 * a);
  for (int n = 0; 2 * n + 1 <= N; ++n)
    f[2 * n + 1] = 2 / std::sqrt(boost::math::constants::pi<double>()) * std::pow(-1.0, n) * std::pow(c, 2 * n + 1) /
                   (factorial<double>(n) * (2 * n + 1));
  for (int n = 0; 2 * n <= N; ++n) g[2 * n] = std::pow(double(a), n) / factorial<double>(n);
  double coef = 0;
  for (int i = 0; i <= N; ++i) coef += f[i] * g[N - i];
  return coef * factorial<double>(N);
}

IdentityCheck axis_identity_check(const QuadForm& form, int n) {
  using boost::math::quadrature::gauss_kronrod;
  const double a1 = form.a1, a2 = form.a2, a3 = form.a3;
  const double L = 9.0 / std::sqrt(a1);
  // analytic branch: int_0^inf exp(Q) erfc(u1 / sqrt 2) dx1 with u1 = 2 sqrt(a1) x1 + a2 x2 / sqrt(a1)
  auto G = [&](double x2) {
    auto f = [&](double x1) {
      double z = (2 * a1 * x1 + a2 * x2) / std::sqrt(2 * a1);
      double q = a1 * x1 * x1 + a2 * x1 * x2 + a3 * x2 * x2;
      if (z > 0) return std::exp(q - z * z) * erfcx<double>(z);
      return std::exp(q) * std::erfc(z);
    };
    return gauss_kronrod<double, 61>::integrate(f, 0.0, L, 15, 1e-15);
  };
  const double h = 0.02;
  double d;
  if (n == 0) {
    d = (-G(2 * h) + 8 * G(h) - 8 * G(-h) + G(-2 * h)) / (12 * h);
  } else if (n == 1) {
    d = (G(-3 * h) - 8 * G(-2 * h) + 13 * G(-h) - 13 * G(h) + 8 * G(2 * h) - G(3 * h)) / (8 * h * h * h);
  } else {
    throw std::out_of_range("axis identity check supports n = 0, 1");
  }
  IdentityCheck r;
  r.lhs = d;
  ExpQDerivatives dq(form);
  r.rhs = (n % 2 ? -1.0 : 1.0) * dq.axis2_integral<double>(2 * n + 1);
  return r;
}

template double gaussian_moment<double>(int, double);
template double ExpQDerivatives::axis1_integral<double>(int) const;
template double ExpQDerivatives::axis2_integral<double>(int) const;
template double ExpQDerivatives::quadrant_integral<double>() const;
template xreal gaussian_moment<xreal>(int, xreal);
template xreal ExpQDerivatives::axis1_integral<xreal>(int) const;
template xreal ExpQDerivatives::axis2_integral<xreal>(int) const;
template xreal ExpQDerivatives::quadrant_integral<xreal>() const;

}  // namespace qm
