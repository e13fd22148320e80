#include "qm/partial_theta.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <vector>

namespace qm {

namespace {

template <class T>
struct Kahan {
  T sum{}, comp{};
  void add(const T& v) {
    T y = v - comp;
    T s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
};

// exp(2 pi i h Q / k) with Q = Qint / s^2, from exact residues
template <class R>
struct PhaseTable {
  i64 h, mod;
  std::vector<cplx<R>> table;
  PhaseTable(const QPoint& p, i64 s) : h(p.h), mod(p.k * s * s) {
    table.resize(static_cast<std::size_t>(mod));
    for (i64 j = 0; j < mod; ++j) table[j] = unit_root<R>(j, mod);
  }
  const cplx<R>& operator()(i64 qint) const {
    __int128 r = (static_cast<__int128>(h) * qint) % mod;
    if (r < 0) r += mod;
    return table[static_cast<std::size_t>(r)];
  }
};

double total_weight(const std::vector<WeightedShift>& ws) {
  double w = 0;
  for (const auto& x : ws) w += std::abs(to_double(x.eps));
  return w;
}

// sum over n in alpha + N0^2 of phase(s^2 Q(n)) exp(-t Q(n)), n = 0 skipped
template <class R, class Phase>
cplx<R> quadrant_sum(const QuadForm& f, i64 s, const ShiftPair& a, R t, double T, const Phase& phase) {
  using std::exp;
  const double s2 = double(s) * double(s);
  const double xmax = std::sqrt(4.0 * f.a3 * T / f.D()) + 1.0;
  const i64 b1 = a.n1(), b2 = a.n2();
  Kahan<cplx<R>> acc;
  for (i64 i = 0;; ++i) {
    i64 X = b1 + s * i;
    double x = double(X) / s;
    if (x > xmax) break;
    double disc = -double(f.D()) * x * x + 4.0 * f.a3 * T;
    if (disc < 0) {
      if (x > 0) break;
      continue;
    }
    double sq = std::sqrt(disc);
    double ylo = (-f.a2 * x - sq) / (2.0 * f.a3), yhi = (-f.a2 * x + sq) / (2.0 * f.a3);
    double y0 = double(b2) / s;
    i64 jlo = std::max<i64>(0, static_cast<i64>(std::ceil(ylo - y0)));
    i64 jhi = static_cast<i64>(std::floor(yhi - y0));
    for (i64 j = jlo; j <= jhi; ++j) {
      i64 Y = b2 + s * j;
      i64 q = f.value(X, Y);
      if (q == 0) continue;
      R Q = R(q) / R(s2);
      acc.add(phase(q) * exp(-t * Q));
    }
  }
  return acc.sum;
}

// sum over j in beta + N0, j != 0, of phase(s^2 a j^2) exp(-t a j^2)
template <class R, class Phase>
cplx<R> line_sum(i64 a, i64 s, i64 beta_s, R t, double T, const Phase& phase) {
  using std::exp;
  Kahan<cplx<R>> acc;
  for (i64 i = 0;; ++i) {
    i64 J = beta_s + s * i;
    double j = double(J) / s;
    if (j > 0 && a * j * j > T) break;
    if (J == 0) continue;
    i64 q = a * J * J;
    acc.add(phase(q) * exp(-t * R(q) / R(double(s) * double(s))));
  }
  return acc.sum;
}

void check_request(const EvalRequest& req) {
  if (!(req.t > 0)) throw std::domain_error("t must be positive");
  if (!(req.tail_bound > 0)) throw std::domain_error("tail bound must be positive");
}

double planar_points(const QuadForm& f, double T) {
  return 3.14159265358979 * T / std::sqrt(f.D() / 4.0);
}

template <class R, class Phase>
cplx<R> f1_impl(const FamilySpec& spec, double t, double tail, const Phase& phase) {
  auto sets = derived_sets(spec);
  double w = total_weight(sets.J);
  double T = lattice_cutoff(t, spec.form.lambda_min(), tail / w);
  if (planar_points(spec.form, T) > kMaxPointsPerShift) {
    double Tcap = kMaxPointsPerShift * std::sqrt(spec.form.D() / 4.0) / 3.14159265358979;
    double lam = spec.form.lambda_min();
    double c = 1 + std::sqrt(2 * 3.14159265358979 / (t * lam));
    throw TruncationError("lattice radius cap reached", w * std::exp(-t * Tcap / 2) * c * c);
  }
  Kahan<cplx<R>> acc;
  for (const auto& ws : sets.J) acc.add(to_real<R>(ws.eps) * quadrant_sum<R>(spec.form, spec.s, ws.alpha, R(t), T, phase));
  return acc.sum;
}

template <class R, class Phase>
cplx<R> boundary_impl(const FamilySpec& spec, bool first, double t, double tail, const Phase& phase) {
  auto sets = derived_sets(spec);
  const auto& list = first ? sets.J1 : sets.J2;
  if (list.empty()) return {};
  i64 a = first ? spec.form.a3 : spec.form.a1;
  double w = total_weight(list);
  double T = line_cutoff(t, double(a), tail / w);
  Kahan<cplx<R>> acc;
  for (const auto& ws : list) {
    const auto& al = ws.alpha;
    Rational other = first ? al.alpha2() : al.alpha1();
    Rational own = first ? al.alpha1() : al.alpha2();
    R sig = own < Rational(0) ? R(-1) : R(1);
    i64 b = (other * Rational(spec.s)).numerator();
    i64 rb = spec.s - b;  // s (1 - beta)
    cplx<R> v = line_sum<R>(a, spec.s, rb, R(t), T, phase) - line_sum<R>(a, spec.s, b, R(t), T, phase);
    acc.add(R(-0.5) * to_real<R>(ws.eps) * sig * v);
  }
  return acc.sum;
}

}  // namespace

double lattice_cutoff(double t, double lambda, double tail) {
  // sum_{Q > T} e^{-tQ} <= e^{-tT/2} prod_j sum_{n_j} e^{-t lambda n_j^2 / 2}
  double c = 1 + std::sqrt(2 * 3.14159265358979 / (t * lambda));
  return std::max(0.0, 2.0 / t * std::log(c * c / tail));
}

double line_cutoff(double t, double a, double tail) {
  double c = 1 + std::sqrt(2 * 3.14159265358979 / (t * a));
  return std::max(0.0, 2.0 / t * std::log(c / tail));
}

template <class R>
cplx<R> eval_F1(const EvalRequest& req) {
  check_request(req);
  PhaseTable<R> ph(req.point, req.spec.s);
  return f1_impl<R>(req.spec, req.t, req.tail_bound, ph);
}

template <class R>
cplx<R> eval_F2(const EvalRequest& req) {
  check_request(req);
  PhaseTable<R> ph(req.point, req.spec.s);
  return boundary_impl<R>(req.spec, true, req.t, req.tail_bound, ph);
}

template <class R>
cplx<R> eval_F3(const EvalRequest& req) {
  check_request(req);
  PhaseTable<R> ph(req.point, req.spec.s);
  return boundary_impl<R>(req.spec, false, req.t, req.tail_bound, ph);
}

template <class R>
cplx<R> eval_F(const EvalRequest& req) {
  check_request(req);
  PhaseTable<R> ph(req.point, req.spec.s);
  double part = req.tail_bound / 3;
  return f1_impl<R>(req.spec, req.t, part, ph) + boundary_impl<R>(req.spec, true, req.t, part, ph) +
         boundary_impl<R>(req.spec, false, req.t, part, ph);
}

cplx<double> eval_F_tau(const FamilySpec& spec, cplx<double> tau, double tail_bound) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  double x = tau.real();
  double t = 2 * boost::math::constants::pi<double>() * tau.imag();
  double s2 = double(spec.s) * double(spec.s);
  auto phase = [&](i64 q) {
    double frac = x * (double(q) / s2);
    frac -= std::floor(frac);
    return std::polar(1.0, 2 * boost::math::constants::pi<double>() * frac);
  };
  double part = tail_bound / 3;
  return f1_impl<double>(spec, t, part, phase) + boundary_impl<double>(spec, true, t, part, phase) +
         boundary_impl<double>(spec, false, t, part, phase);
}

#define QM_INSTANTIATE(R)                                 \
  template cplx<R> eval_F1<R>(const EvalRequest&);        \
  template cplx<R> eval_F2<R>(const EvalRequest&);        \
  template cplx<R> eval_F3<R>(const EvalRequest&);        \
  template cplx<R> eval_F<R>(const EvalRequest&);

QM_INSTANTIATE(double)
QM_INSTANTIATE(xreal)

}  // namespace qm
