#include "qm/eichler.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>

#include "qm/partial_theta.hpp"
#include "qm/shimura.hpp"
#include "qm/special.hpp"

namespace qm {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
using C = cplx<double>;
const C kI(0, 1);

i64 mod_pos(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

template <class F>
C integrate_to_inf(F f, double a, double tol) {
  boost::math::quadrature::exp_sinh<double> es(12);
  return es.integrate(f, a, std::numeric_limits<double>::infinity(), tol);
}

// visits n in alpha + Z^2 with Q(n) <= T, passing integer s n
template <class Visit>
void visit_lattice(const QuadForm& f, i64 s, const ShiftPair& a, double T, Visit&& visit) {
  const double D = f.D();
  const double n2max = std::sqrt(4.0 * f.a1 * T / D) + 1;
  const i64 b2 = a.n2(), b1 = a.n1();
  const i64 j2lo = static_cast<i64>(std::floor((-n2max * s - b2) / s)) - 1;
  const i64 j2hi = static_cast<i64>(std::ceil((n2max * s - b2) / s)) + 1;
  for (i64 j2 = j2lo; j2 <= j2hi; ++j2) {
    const i64 X2 = b2 + s * j2;
    const double n2 = double(X2) / s;
    const double disc = 4.0 * f.a1 * T - D * n2 * n2;
    if (disc < 0) continue;
    const double lo = (-f.a2 * n2 - std::sqrt(disc)) / (2.0 * f.a1);
    const double hi = (-f.a2 * n2 + std::sqrt(disc)) / (2.0 * f.a1);
    const i64 j1lo = static_cast<i64>(std::floor((lo * s - b1) / s));
    const i64 j1hi = static_cast<i64>(std::ceil((hi * s - b1) / s));
    for (i64 j1 = j1lo; j1 <= j1hi; ++j1) {
      const i64 X1 = b1 + s * j1;
      if (X1 == 0 && X2 == 0) continue;
      visit(X1, X2);
    }
  }
}

double eps_total(const std::vector<WeightedShift>& ws) {
  double w = 0;
  for (const auto& x : ws) w += std::abs(to_double(x.eps));
  return w;
}

}  // namespace

KappaFrame::KappaFrame(const QuadForm& form)
    : a1(double(form.a1)), a2(double(form.a2)), a3(double(form.a3)) {
  m = std::sqrt(4 * a3 - a2 * a2 / a1);
  kappa = a2 / std::sqrt(double(form.D()));
}

std::array<double, 2> KappaFrame::u(double n1, double n2, double v) const {
  const double sv = std::sqrt(v);
  return {sv * (2 * std::sqrt(a1) * n1 + a2 * n2 / std::sqrt(a1)), sv * m * n2};
}

std::array<double, 2> KappaFrame::x(double n1, double n2, double v) const {
  const double sv = std::sqrt(v);
  return {2 * std::sqrt(a1 * v) * n1, sv * m * n2};
}

ThetaCharSet theta_char_sets(const FamilySpec& spec) {
  derived_sets(spec);
  const auto& f = spec.form;
  const i64 s = spec.s;
  ThetaCharSet cs;
  cs.modA = 2 * f.a1 * s;
  cs.modB = 2 * f.a3 * s;
  for (int idx = 0; idx < int(spec.jstar.size()); ++idx) {
    const auto& w = spec.jstar[idx];
    const i64 X1 = w.alpha.n1(), X2 = w.alpha.n2();
    for (i64 r = 0; r < 2 * f.a1; ++r)
      cs.A.push_back({{mod_pos(2 * f.a1 * X1 + f.a2 * X2 + f.a2 * r * s, cs.modA), mod_pos(X2 + r * s, cs.modA)},
                      w.eps,
                      idx});
    for (i64 r = 0; r < 2 * f.a3; ++r)
      cs.B.push_back({{mod_pos(2 * f.a3 * X2 + f.a2 * X1 + f.a2 * r * s, cs.modB), mod_pos(X1 + r * s, cs.modB)},
                      w.eps,
                      idx});
  }
  auto constant = [&](const std::vector<CharEntry>& set, i64 mod) {
    std::set<i64> vals;
    for (const auto& e : set) vals.insert(mod_pos(e.residue[0] * e.residue[0] + f.D() * e.residue[1] * e.residue[1], mod));
    return vals.size() <= 1;
  };
  cs.constant_A = constant(cs.A, cs.modA);
  cs.constant_B = constant(cs.B, cs.modB);
  return cs;
}

cplx<double> E_alpha_series(const QuadForm& form, i64 s, const ShiftPair& alpha, cplx<double> tau, double tail) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  const double v = tau.imag(), t = 2 * kPi * v;
  const double T = lattice_cutoff(t, form.lambda_min(), tail);
  const KappaFrame fr(form);
  C part = 0;
  visit_lattice(form, s, alpha, T, [&](i64 X1, i64 X2) {
    const double n1 = double(X1) / s, n2 = double(X2) / s;
    const auto x = fr.x(n1, n2, v);
    const double m2 = erf_M2_x<double>(fr.kappa, x[0], x[1]);
    part += m2 * std::exp(-2.0 * kPi * kI * tau * form.eval(n1, n2));
  });
  return part / 2.0;
}

cplx<double> E_m2_series(const FamilySpec& spec, cplx<double> tau, double tail) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  derived_sets(spec);
  const double tl = tail / std::max(1.0, eps_total(spec.jstar));
  C acc = 0;
  for (const auto& w : spec.jstar) acc += to_double(w.eps) * E_alpha_series(spec.form, spec.s, w.alpha, tau, tl);
  return acc;
}

EM2Lattice::EM2Lattice(const FamilySpec& spec, double v, double tail, Precision prec) : s_(spec.s) {
  derived_sets(spec);
  const double t = 2 * kPi * v;
  const double T = lattice_cutoff(t, spec.form.lambda_min(), tail / std::max(1.0, eps_total(spec.jstar)));
  const KappaFrame fr(spec.form);
  const xreal kap = xreal(spec.form.a2) / sqrt(xreal(spec.form.D()));
  const xreal sv = sqrt(xreal(v));
  const xreal c1 = 2 * sqrt(xreal(spec.form.a1)) * sv;
  const xreal c2 = sv * sqrt(xreal(spec.form.D()) / xreal(spec.form.a1));
  const xreal tx = 2 * boost::math::constants::pi<xreal>() * xreal(v);
  for (const auto& w : spec.jstar) {
    const xreal e = to_real<xreal>(w.eps) / 2;
    visit_lattice(spec.form, s_, w.alpha, T, [&](i64 X1, i64 X2) {
      const i64 qi = spec.form.value(X1, X2);
      const xreal Q = xreal(qi) / xreal(s_ * s_);
      xreal m2;
      if (prec == Precision::extended) {
        m2 = erf_M2_x<xreal>(kap, c1 * xreal(X1) / xreal(s_), c2 * xreal(X2) / xreal(s_));
      } else {
        const auto x = fr.x(double(X1) / s_, double(X2) / s_, v);
        m2 = xreal(erf_M2_x<double>(fr.kappa, x[0], x[1]));
      }
      qint_.push_back(qi);
      value_.push_back(e * m2 * exp(tx * Q));
    });
  }
}

cplx<xreal> EM2Lattice::at(const QPoint& p) const {
  const i64 mod = p.k * s_ * s_;
  std::vector<cplx<xreal>> table(static_cast<std::size_t>(mod));
  for (i64 j = 0; j < mod; ++j) table[j] = unit_root<xreal>(j, mod);
  xreal re = 0, im = 0;
  for (std::size_t i = 0; i < qint_.size(); ++i) {
    __int128 r = (-static_cast<__int128>(p.h) * qint_[i]) % mod;
    if (r < 0) r += mod;
    const auto& z = table[static_cast<std::size_t>(r)];
    re += value_[i] * z.real();
    im += value_[i] * z.imag();
  }
  return {re, im};
}

namespace {

// theta_1 + theta_2 at (w1, w2) grouped so the w2 dependence is a short sum
struct ThetaPair {
  const QuadForm& f;
  const ShiftPair& a;
  i64 s;
  int R;

  // coefficients P[j] with theta = sum_j P[j] exp(pi i D n_j^2 w2 / (2 a))
  struct Row {
    std::vector<double> n;
    std::vector<C> P;
    double scale;
  };

  Row rows(C w1, bool first) const {
    Row r;
    const double af = first ? f.a1 : f.a3;
    r.scale = kPi * f.D() / (2 * af);
    for (int j = -R; j <= R; ++j) {
      const double nk = (first ? double(a.n2()) : double(a.n1())) / s + j;  // n2 for theta_1, n1 for theta_2
      C acc = 0;
      for (int i = -R; i <= R; ++i) {
        const double no = (first ? double(a.n1()) : double(a.n2())) / s + i;
        const double c = first ? 2 * f.a1 * no + f.a2 * nk : f.a2 * nk + 2 * f.a3 * no;
        acc += c * std::exp(kI * kPi * c * c * w1 / (2 * af));
      }
      r.n.push_back(nk);
      r.P.push_back(acc * nk / af);
    }
    return r;
  }
};

C row_eval(const ThetaPair::Row& r, C w2) {
  C acc = 0;
  for (std::size_t j = 0; j < r.n.size(); ++j) acc += r.P[j] * std::exp(kI * r.scale * r.n[j] * r.n[j] * w2);
  return acc;
}

}  // namespace

cplx<double> quadrature_E(const FamilySpec& spec, cplx<double> tau, double tol) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  derived_sets(spec);
  const double v = tau.imag();
  const double sD = std::sqrt(double(spec.form.D()));
  // terms below exp(-40) at the lowest point of the path, Im w = v
  const double amin = std::min(double(spec.form.D()) / (2.0 * std::max(spec.form.a1, spec.form.a3)),
                               2.0 * std::min(spec.form.a1, spec.form.a3));
  const int R = static_cast<int>(std::sqrt(40.0 / (kPi * v * std::min(amin, 0.5)))) + 3;
  C total = 0;
  for (const auto& w : spec.jstar) {
    ThetaPair tp{spec.form, w.alpha, spec.s, R};
    auto outer = [&](double y1) -> C {
      const C w1 = kI * y1 - tau;
      auto r1 = tp.rows(w1, true), r2 = tp.rows(w1, false);
      auto inner = [&](double y2) -> C {
        const C w2 = kI * y2 - tau;
        return (row_eval(r1, w2) + row_eval(r2, w2)) / std::sqrt(y2);
      };
      return integrate_to_inf(inner, y1, tol) / std::sqrt(y1);
    };
    total += to_double(w.eps) * (sD / 4) * integrate_to_inf(outer, 2 * v, tol);
  }
  return total;
}

namespace {

// Theta_1(N, h, N; w) on the path, reflected when Im w is small
C theta1(i64 N, i64 h, C w) { return shimura_theta(1, N, h, N, w); }

// (-i w)^(-3/2) Theta_1(N, h, N; -1/w) = (-i) N^(-1/2) sum_m m e(m h / N) q^(m^2 / 2N)
C theta1_S(i64 N, i64 h, C w) {
  const C wp = -1.0 / w;
  if (wp.imag() >= w.imag()) return std::pow(-kI * w, -1.5) * shimura_theta_direct(1, N, h, N, wp);
  const double c = kPi * w.imag() / N;
  const i64 M = static_cast<i64>(std::sqrt(40.0 / c)) + 2;
  C acc = 0;
  for (i64 m = -M; m <= M; ++m) {
    const double ang = 2 * kPi * double(mod_pos(m * h, N)) / N;
    acc += double(m) * C(std::cos(ang), std::sin(ang)) * std::exp(kI * kPi * w * double(m * m) / double(N));
  }
  return -kI / std::sqrt(double(N)) * acc;
}

// -int_{2v}^inf f(iy1 - tau) y1^-1/2 int_{y1}^inf g(iy2 - tau) y2^-1/2
template <class F, class G>
C double_from_tau(F f, G g, C tau, double tol) {
  const double v = tau.imag();
  auto outer = [&](double y1) -> C {
    auto inner = [&](double y2) -> C { return g(kI * y2 - tau) / std::sqrt(y2); };
    return f(kI * y1 - tau) / std::sqrt(y1) * integrate_to_inf(inner, y1, tol);
  };
  return -integrate_to_inf(outer, 2 * v, tol);
}

// same with paths w = iy from 0, weight (y - i tau)^-1/2
template <class F, class G>
C double_from_zero(F f, G g, C tau, double tol) {
  auto outer = [&](double y1) -> C {
    auto inner = [&](double y2) -> C { return g(kI * y2) / std::sqrt(y2 - kI * tau); };
    return f(kI * y1) / std::sqrt(y1 - kI * tau) * integrate_to_inf(inner, y1, tol);
  };
  return -integrate_to_inf(outer, 0.0, tol);
}

template <class F>
C single_from_tau(F f, C tau, double tol) {
  auto g = [&](double y) -> C { return f(kI * y - tau) / std::sqrt(y); };
  return kI * integrate_to_inf(g, 2 * tau.imag(), tol);
}

template <class F>
C single_from_zero(F f, C tau, double tol) {
  auto g = [&](double y) -> C { return f(kI * y) / std::sqrt(y - kI * tau); };
  return kI * integrate_to_inf(g, 0.0, tol);
}

}  // namespace

cplx<double> shimura_form_E(const FamilySpec& spec, cplx<double> tau, double tol) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  const auto cs = theta_char_sets(spec);
  const auto& f = spec.form;
  const double sD = std::sqrt(double(f.D()));
  const double D = double(f.D());
  C acc = 0;
  auto part = [&](const std::vector<CharEntry>& set, i64 mod, double a) {
    C sum = 0;
    for (const auto& e : set) {
      auto fa = [&](C w) { return theta1(mod, e.residue[0], w); };
      auto ga = [&](C w) { return theta1(mod, e.residue[1], D * w); };
      sum += to_double(e.weight) * double_from_tau(fa, ga, tau, tol);
    }
    return -sD / (4 * a * double(spec.s)) * sum;
  };
  acc += part(cs.A, cs.modA, double(f.a1));
  acc += part(cs.B, cs.modB, double(f.a3));
  return acc;
}

EStarDecomposition E_star_decomposition(const FamilySpec& spec, cplx<double> tau, double tail) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  const auto sets = derived_sets(spec);
  const double v = tau.imag(), t = 2 * kPi * v;
  const auto& f = spec.form;
  const i64 s = spec.s;
  const KappaFrame fr(f);
  const double w = std::max(1.0, 4 * eps_total(spec.jstar));
  const double T = lattice_cutoff(t, f.lambda_min(), tail / w);
  auto qpow = [&](double Q) { return std::exp(-2.0 * kPi * kI * tau * Q); };
  EStarDecomposition out;

  // quadrant sum over n in alpha + N0^2 of M2*(x(sign n1, n2)) q^-Q(sign n1, n2)
  auto quadrant = [&](const ShiftPair& a, int sign, int side1) {
    C acc = 0;
    const i64 b1 = a.n1(), b2 = a.n2();
    const double xmax = std::sqrt(4.0 * f.a3 * T / f.D()) + 1.0;
    for (i64 i = 0;; ++i) {
      const i64 X1 = b1 + s * i;
      const double n1 = double(X1) / s;
      if (n1 > xmax) break;
      for (i64 j = 0;; ++j) {
        const i64 X2 = b2 + s * j;
        const double n2 = double(X2) / s;
        const double Q = f.eval(sign * n1, n2);
        if (Q > T && n2 > 0) break;
        if (X1 == 0 && X2 == 0) continue;
        if (Q > T) continue;
        const auto x = fr.x(sign * n1, n2, v);
        acc += erf_M2_star_x<double>(fr.kappa, x[0], x[1], side1, 1) * qpow(Q);
      }
    }
    return acc;
  };
  for (const auto& ws : sets.J) out.E_star += to_double(ws.eps) / 2 * quadrant(ws.alpha, 1, 1);
  for (const auto& ws : sets.J) {
    const ShiftPair tilde = ShiftPair::from_alpha(Rational(1) - ws.alpha.alpha1(), ws.alpha.alpha2(), s);
    out.E_star += to_double(ws.eps) / 2 * quadrant(tilde, -1, -1);
  }

  // boundary terms: 1/2 eps sigma [sum_{beta + N0} - sum_{1 - beta + N0}] M(2 sqrt(a v) j) q^(-a j^2)
  auto line = [&](i64 a, i64 bnum) {
    const double Tl = line_cutoff(t, double(a), tail / w);
    C acc = 0;
    for (i64 i = 0;; ++i) {
      const i64 J = bnum + s * i;
      const double j = double(J) / s;
      if (a * j * j > Tl && j > 0) break;
      if (J == 0) continue;
      acc += erf_M<double>(2 * std::sqrt(a * v) * j) * qpow(double(a) * j * j);
    }
    return acc;
  };
  for (const auto& ws : sets.J1) {
    const double sigma = ws.alpha.alpha1() <= Rational(0) ? 1.0 : -1.0;
    const i64 b = ws.alpha.n2();
    out.H1 += to_double(ws.eps) / 2 * sigma * (line(f.a3, b) - line(f.a3, s - b));
  }
  for (const auto& ws : sets.J2) {
    const double sigma = ws.alpha.alpha2() <= Rational(0) ? 1.0 : -1.0;
    const i64 b = ws.alpha.n1();
    out.H2 += to_double(ws.eps) / 2 * sigma * (line(f.a1, b) - line(f.a1, s - b));
  }
  return out;
}

DepthTwoReport depth_two_transform_residual(const FamilySpec& spec, cplx<double> tau, std::array<i64, 2> charA,
                                            double tol) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  const auto& f = spec.form;
  const i64 N = 2 * f.a1 * spec.s;
  const i64 Np = 2 * f.D() * f.a1 * spec.s;
  const i64 h1 = charA[0], h2 = f.D() * charA[1];
  auto ff = [&](C w) { return theta1(N, h1, w); };
  auto gg = [&](C w) { return theta1(Np, h2, w); };
  auto FF = [&](C w) { return theta1_S(N, h1, w); };
  auto GG = [&](C w) { return theta1_S(Np, h2, w); };
  DepthTwoReport r;
  const C taup = -1.0 / tau;
  r.I_fg = double_from_tau(ff, gg, tau, tol);
  r.I_FG = double_from_tau(FF, GG, taup, tol);
  r.J0 = double_from_zero(ff, gg, tau, tol);
  r.I_f = single_from_tau(ff, tau, tol);
  r.r_f = single_from_zero(ff, tau, tol);
  r.r_g = single_from_zero(gg, tau, tol);
  const C w = std::pow(-kI * tau, -1.0);
  const C rhs = r.J0 + r.I_f * r.r_g - r.r_f * r.r_g;
  r.residual = std::abs(r.I_fg - w * r.I_FG - rhs);
  r.residual_plus_sign = std::abs(r.I_fg + w * r.I_FG - rhs);
  return r;
}

cplx<double> r_theta(i64 N, i64 h, cplx<double> tau, double tol) {
  if (tau.imag() < 0) throw std::domain_error("tau must lie in the closed upper half plane");
  if (std::abs(tau) == 0) throw std::domain_error("error of modularity undefined at 0");
  auto ff = [&](C w) { return theta1(N, h, w); };
  return single_from_zero(ff, tau, tol);
}

}  // namespace qm
