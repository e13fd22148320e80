#include "qm/indefinite.hpp"

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qm/eichler.hpp"
#include "qm/partial_theta.hpp"
#include "qm/special.hpp"

namespace qm {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
using C = cplx<double>;
const C kI(0, 1);

i64 det3(i64 a, i64 b, i64 c, i64 d, i64 e, i64 f, i64 g, i64 h, i64 i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

Vec4 scaled(const Vec4& x, double c) { return {x[0] * c, x[1] * c, x[2] * c, x[3] * c}; }

Vec4 to_vec(const Vec4i& c) { return {double(c[0]), double(c[1]), double(c[2]), double(c[3])}; }

double pair_d(const Mat4i& A, const Vec4& x, const Vec4& y) {
  double acc = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += x[i] * double(A[i][j]) * y[j];
  return acc;
}

// C1 - B(C1,C2)/B(C2,C2) C2
Vec4 perp(const Mat4i& A, const Vec4i& C1, const Vec4i& C2) {
  const double r = double(pair(A, C1, C2)) / double(pair(A, C2, C2));
  Vec4 out;
  for (int i = 0; i < 4; ++i) out[i] = C1[i] - r * C2[i];
  return out;
}

// M with the sgn* value at the origin
double M_star(double u) { return u == 0 ? -1.0 : erf_M<double>(u); }

struct ShellGeometry {
  Eigen::Matrix4d majorant;
  Eigen::Vector4d box;  // |n_i| <= r box_i on {n^T majorant n / 2 <= r^2}
};

ShellGeometry shell_geometry(const Mat4i& A) {
  Eigen::Matrix4d M;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M(i, j) = double(A[i][j]);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(M);
  const Eigen::Vector4d lam = es.eigenvalues().cwiseAbs();
  ShellGeometry g;
  g.majorant = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
  const Eigen::Matrix4d inv = g.majorant.inverse();
  for (int i = 0; i < 4; ++i) g.box(i) = std::sqrt(2 * inv(i, i));
  return g;
}

template <class Visit>
void visit_ball(const ShellGeometry& g, const Vec4& a, double r_lo, double r_hi, Visit&& visit) {
  std::array<i64, 4> lo, hi;
  for (int i = 0; i < 4; ++i) {
    lo[i] = static_cast<i64>(std::ceil(-r_hi * g.box(i) - a[i]));
    hi[i] = static_cast<i64>(std::floor(r_hi * g.box(i) - a[i]));
  }
  const double lo2 = r_lo < 0 ? -1.0 : r_lo * r_lo, hi2 = r_hi * r_hi;
  Eigen::Vector4d n;
  for (i64 j0 = lo[0]; j0 <= hi[0]; ++j0)
    for (i64 j1 = lo[1]; j1 <= hi[1]; ++j1)
      for (i64 j2 = lo[2]; j2 <= hi[2]; ++j2)
        for (i64 j3 = lo[3]; j3 <= hi[3]; ++j3) {
          n << a[0] + j0, a[1] + j1, a[2] + j2, a[3] + j3;
          const double q = 0.5 * n.dot(g.majorant * n);
          if (q > lo2 && q <= hi2) visit(Vec4{n(0), n(1), n(2), n(3)});
        }
}

Vec4 shift_of(const IndefiniteSpec& spec) {
  return {to_double(spec.a[0]), to_double(spec.a[1]), to_double(spec.a[2]), to_double(spec.a[3])};
}

template <class Weight>
ThetaSum shell_sum(const IndefiniteSpec& spec, C tau, double tail, Weight&& P) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  const double v = tau.imag(), sv = std::sqrt(v);
  const auto g = shell_geometry(spec.A1);
  const Vec4 a = shift_of(spec);
  ThetaSum out;
  C acc = 0;
  // |P^-(sqrt v n) q^Q1(n)| <= 2 exp(-2 pi v (Q(y) + Q(x + y))) and Q(y) + Q(x + y) >= c n^T majorant n / 2
  Eigen::Matrix4d G;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double e = double(spec.A0[i][j]);
      G(i, j) = e;
      G(i, j + 2) = e;
      G(i + 2, j) = e;
      G(i + 2, j + 2) = 2 * e;
    }
  const double c = Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix4d>(G, g.majorant).eigenvalues().minCoeff();
  const double r_min = std::sqrt(std::max(0.0, std::log(20.0 / tail)) / (2 * kPi * v * c));
  const double step = 0.5, r_max = std::max(12.0, 2 * r_min);
  double r = 0;
  int quiet = 0;
  while (true) {
    const double r_next = r + step;
    double shell = 0;
    std::size_t count = 0;
    visit_ball(g, a, r == 0 ? -1.0 : r, r_next, [&](const Vec4& n) {
      ++count;
      const double p = P(scaled(n, sv));
      if (p == 0) return;
      const C term = p * std::exp(2.0 * kPi * kI * tau * spec.Q1(n));
      acc += term;
      shell += std::abs(term);
    });
    out.terms += count;
    r = r_next;
    out.last_shell = shell;
    quiet = (count > 0 && shell < tail / 10) ? quiet + 1 : 0;
    if (quiet >= 2 && r >= r_min) break;
    if (r >= r_max) throw TruncationError("indefinite theta shells did not settle", shell);
  }
  out.value = acc;
  out.radius = r;
  return out;
}

template <class Visit>
void visit_plane(const QuadForm& f, double b1, double b2, double T, Visit&& visit) {
  const double D = f.D();
  const double n2max = std::sqrt(4.0 * f.a1 * T / D) + 1;
  for (i64 j2 = static_cast<i64>(std::floor(-n2max - b2)); j2 <= static_cast<i64>(std::ceil(n2max - b2)); ++j2) {
    const double n2 = b2 + j2;
    const double disc = 4.0 * f.a1 * T - D * n2 * n2;
    if (disc < 0) continue;
    const double lo = (-f.a2 * n2 - std::sqrt(disc)) / (2.0 * f.a1);
    const double hi = (-f.a2 * n2 + std::sqrt(disc)) / (2.0 * f.a1);
    for (i64 j1 = static_cast<i64>(std::floor(lo - b1)); j1 <= static_cast<i64>(std::ceil(hi - b1)); ++j1)
      visit(b1 + j1, n2);
  }
}

// P_full with the M-pieces dropped once their Gaussian bound times exp(log_q) is below exp(-80)
double P_full_pruned(const QuadForm& f, const Vec4& n, double log_q) {
  const double a1 = f.a1, a2 = f.a2, a3 = f.a3;
  const double cut = -80 - log_q;
  double out = P_sign(f, n);
  const double x1 = 2 * std::sqrt(a1) * n[2], x2 = std::sqrt(double(f.D()) / a1) * n[3];
  const double u1 = x1 + a2 / std::sqrt(double(f.D())) * x2;
  if (-kPi * (u1 * u1 + x2 * x2) + std::log(2.0) > cut) out += P_minus(f, n);
  const double s13 = sgn(n[0]) + sgn(n[2]);
  const double s24 = sgn(n[1]) + sgn(n[3]);
  const double w1 = (a2 * n[2] + 2 * a3 * n[3]) / std::sqrt(a3);
  const double w2 = (2 * a1 * n[2] + a2 * n[3]) / std::sqrt(a1);
  if (s13 != 0 && -kPi * w1 * w1 > cut) out += s13 * M_star(w1);
  if (s24 != 0 && -kPi * w2 * w2 > cut) out += s24 * M_star(w2);
  return out;
}

struct Bucket {
  C value = 0;
  double abs_sum = 0;
  std::size_t count = 0;
};

// shells of rho(n) = Q(x) + delta (|B2(y)| + |B1(y)|), x = (n1, n2), y = (n3, n4), (B2, B1) = A0 y;
// Q1 >= rho wherever the sign product is nonzero
std::vector<Bucket> rho_buckets(const IndefiniteSpec& spec, C tau, double R, double step) {
  const auto& f = spec.form;
  auto frac_dist = [](const Rational& r) {
    const Rational fr = r - Rational(floor_of(r));
    return std::min(to_double(fr), 1.0 - to_double(fr));
  };
  const double delta = std::min(frac_dist(spec.a[0]), frac_dist(spec.a[1]));
  if (!(delta > 0)) throw std::domain_error("completed theta needs a1 and a2 off the integers");
  const double v = tau.imag(), sv = std::sqrt(v);
  const double a1 = f.a1, a2 = f.a2, a3 = f.a3, D = f.D();
  const double b3 = to_double(spec.a[2]), b4 = to_double(spec.a[3]);
  std::vector<Bucket> out(std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(R / step))));
  visit_plane(f, to_double(spec.a[0]), to_double(spec.a[1]), R, [&](double n1, double n2) {
    const double qx = f.eval(n1, n2);
    const double L = (R - qx) / delta;
    if (L < 0) return;
    // |y| bounds from y = A0^{-1} w, |w|_1 <= L
    const double y4max = L * std::max(a2, 2 * a1) / D;
    for (i64 j4 = static_cast<i64>(std::floor(-y4max - b4)); j4 <= static_cast<i64>(std::ceil(y4max - b4)); ++j4) {
      const double n4 = b4 + j4;
      const double lo = (-L - a2 * n4) / (2 * a1), hi = (L - a2 * n4) / (2 * a1);
      for (i64 j3 = static_cast<i64>(std::floor(lo - b3)); j3 <= static_cast<i64>(std::ceil(hi - b3)); ++j3) {
        const double n3 = b3 + j3;
        const double w = std::abs(2 * a1 * n3 + a2 * n4) + std::abs(a2 * n3 + 2 * a3 * n4);
        const double rho = qx + delta * w;
        if (rho > R) continue;
        const Vec4 n{n1, n2, n3, n4};
        auto& b = out[std::min(out.size() - 1, static_cast<std::size_t>(rho / step))];
        ++b.count;
        const double Q1 = spec.Q1(n);
        const double P = P_full_pruned(f, scaled(n, sv), -2 * kPi * v * Q1);
        if (P == 0) continue;
        const C term = P * std::exp(2.0 * kPi * kI * tau * Q1);
        b.value += term;
        b.abs_sum += std::abs(term);
      }
    }
  });
  return out;
}

}  // namespace

i64 pair(const Mat4i& A, const Vec4i& x, const Vec4i& y) {
  i64 acc = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += x[i] * A[i][j] * y[j];
  return acc;
}

double pair(const Mat4i& A, const Vec4i& x, const Vec4& y) { return pair_d(A, to_vec(x), y); }

double IndefiniteSpec::Q1(const Vec4& n) const { return 0.5 * pair_d(A1, n, n); }

Vec4q admissible_shift(const QuadForm& form, i64 s, const ShiftPair& alpha, std::array<i64, 2> z) {
  const i64 D = form.D();
  // A0^{-1} = [[2a3, -a2], [-a2, 2a1]] / D
  const Rational b1(2 * form.a3 * z[0] - form.a2 * z[1], D * s);
  const Rational b2(-form.a2 * z[0] + 2 * form.a1 * z[1], D * s);
  return {b1, b2, alpha.alpha1(), alpha.alpha2()};
}

IndefiniteSpec make_indefinite_spec(const QuadForm& form, i64 s, const ShiftPair& alpha, std::array<i64, 2> z) {
  IndefiniteSpec sp;
  sp.form = form;
  sp.s = s;
  sp.alpha = alpha;
  sp.A0 = {{{2 * form.a1, form.a2}, {form.a2, 2 * form.a3}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      sp.A1[i][j] = sp.A0[i][j];
      sp.A1[i][j + 2] = sp.A0[i][j];
      sp.A1[i + 2][j] = sp.A0[i][j];
      sp.A1[i + 2][j + 2] = 0;
    }
  sp.C1 = {0, 1, 0, -1};
  sp.C2 = {1, 0, -1, 0};
  sp.C1p = {0, 0, form.a2, -2 * form.a1};
  sp.C2p = {0, 0, -2 * form.a3, form.a2};
  sp.a = admissible_shift(form, s, alpha, z);
  return sp;
}

bool shift_admissible(const IndefiniteSpec& spec) {
  if (spec.a[2] != spec.alpha.alpha1() || spec.a[3] != spec.alpha.alpha2()) return false;
  for (int i = 0; i < 4; ++i) {
    Rational acc = 0;
    for (int j = 0; j < 4; ++j) acc += Rational(spec.A1[i][j]) * spec.a[j];
    if (!is_integer(acc * Rational(spec.s))) return false;
  }
  return true;
}

bool ConeReport::all_pass() const {
  if (!symmetric || signature != std::array<int, 2>{2, 2}) return false;
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

ConeReport verify_cone_conditions(const IndefiniteSpec& spec) {
  const auto& A = spec.A1;
  ConeReport rep;
  rep.symmetric = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (A[i][j] != A[j][i]) rep.symmetric = false;
  {
    Eigen::Matrix4d M;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) M(i, j) = double(A[i][j]);
    const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(M).eigenvalues();
    for (int i = 0; i < 4; ++i) {
      if (ev(i) > 1e-9) ++rep.signature[0];
      if (ev(i) < -1e-9) ++rep.signature[1];
    }
  }
  // order 1, 1', 2, 2'
  const std::array<Vec4i, 4> Cs{spec.C1, spec.C1p, spec.C2, spec.C2p};
  std::array<std::array<i64, 4>, 4> G;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) G[i][j] = pair(A, Cs[i], Cs[j]);
  auto add = [&](int idx, std::string name, bool pass, std::string detail) {
    rep.conditions.push_back({idx, std::move(name), pass, std::move(detail)});
  };
  auto fmt = [](std::initializer_list<i64> xs) {
    std::ostringstream os;
    bool first = true;
    for (i64 x : xs) {
      os << (first ? "" : ", ") << x;
      first = false;
    }
    return os.str();
  };
  add(1, "B(C1,C2') = B(C1',C2') = B(C1',C2) = 0", G[0][3] == 0 && G[1][3] == 0 && G[1][2] == 0,
      fmt({G[0][3], G[1][3], G[1][2]}));
  add(2, "Q(C1) < 0 and Q(C2) < 0", G[0][0] < 0 && G[2][2] < 0, fmt({G[0][0], G[2][2]}));
  add(3, "Q(C1') = Q(C2') = 0", G[1][1] == 0 && G[3][3] == 0, fmt({G[1][1], G[3][3]}));
  add(4, "B(C1,C1') < 0 and B(C2,C2') < 0", G[0][1] < 0 && G[2][3] < 0, fmt({G[0][1], G[2][3]}));
  rep.delta = G[0][0] * G[2][2] - G[0][2] * G[0][2];
  add(5, "Delta(C1,C2) > 0", rep.delta > 0, fmt({rep.delta}));
  // Delta_{1 2 2'}, Delta_{1 1' 2} and the cofactor at (1', 2')
  const i64 d122 = det3(G[0][0], G[0][2], G[0][3], G[2][0], G[2][2], G[2][3], G[3][0], G[3][2], G[3][3]);
  const i64 d112 = det3(G[0][0], G[0][1], G[0][2], G[1][0], G[1][1], G[1][2], G[2][0], G[2][1], G[2][2]);
  const i64 minor = det3(G[0][0], G[0][1], G[0][2], G[2][0], G[2][1], G[2][2], G[3][0], G[3][1], G[3][2]);
  const i64 d12 = minor;  // (-1)^(2+4)
  rep.M00 = {d122, d12, d112};
  add(6, "M00 positive definite", d122 > 0 && d122 * d112 - d12 * d12 > 0, fmt({d122, d12, d112}));
  return rep;
}

double boosted_M(const Mat4i& A, const Vec4i& C, const Vec4& x) {
  const i64 n = pair(A, C, C);
  if (n >= 0) throw std::domain_error("boosted M needs B(C,C) < 0");
  return erf_M<double>(pair(A, C, x) / std::sqrt(-double(n)));
}

double boosted_M2(const Mat4i& A, const Vec4i& C1, const Vec4i& C2, const Vec4& x) {
  const i64 b11 = pair(A, C1, C1), b22 = pair(A, C2, C2), b12 = pair(A, C1, C2);
  const i64 delta = b11 * b22 - b12 * b12;
  if (b11 >= 0 || b22 >= 0 || delta <= 0) throw std::domain_error("boosted M2 needs negative norms and Delta > 0");
  const double kappa = -double(b12) / std::sqrt(double(delta));
  const double u1 = pair(A, C2, x) / std::sqrt(-double(b22));
  const Vec4 p = perp(A, C1, C2);
  const double u2 = pair_d(A, p, x) / std::sqrt(-pair_d(A, p, p));
  return erf_M2<double>(kappa, u1, u2);
}

double phi(const IndefiniteSpec& spec, const Vec4& x) {
  const auto& A = spec.A1;
  return (sgn(pair(A, spec.C1, x)) - sgn(pair(A, spec.C1p, x))) *
         (sgn(pair(A, spec.C2, x)) - sgn(pair(A, spec.C2p, x)));
}

double phi_hat_correction(const IndefiniteSpec& spec, const Vec4& x) {
  const auto& A = spec.A1;
  const double s21 = sgn(pair_d(A, perp(A, spec.C2, spec.C1), x)) - sgn(pair(A, spec.C2p, x));
  const double s12 = sgn(pair_d(A, perp(A, spec.C1, spec.C2), x)) - sgn(pair(A, spec.C1p, x));
  double out = boosted_M2(A, spec.C1, spec.C2, x);
  if (s21 != 0) out += s21 * boosted_M(A, spec.C1, x);
  if (s12 != 0) out += s12 * boosted_M(A, spec.C2, x);
  return out;
}

double P_minus(const QuadForm& f, const Vec4& n) {
  const double a1 = f.a1, a2 = f.a2;
  const double kappa = a2 / std::sqrt(double(f.D()));
  const double m = std::sqrt(double(f.D()) / a1);
  // u1 = 2 sqrt(a1) n3 + a2 n4 / sqrt(a1) = x1 + kappa x2, addressed through x so the loci are exact
  (void)a2;
  return erf_M2_x<double>(kappa, 2 * std::sqrt(a1) * n[2], m * n[3]);
}

double P_sign(const QuadForm& f, const Vec4& n) {
  return (sgn(2.0 * f.a1 * n[2] + f.a2 * n[3]) + sgn(n[0])) * (sgn(f.a2 * n[2] + 2.0 * f.a3 * n[3]) + sgn(n[1]));
}

double P_full(const QuadForm& f, const Vec4& n) {
  const double a1 = f.a1, a2 = f.a2, a3 = f.a3;
  double out = P_minus(f, n) + P_sign(f, n);
  const double s13 = sgn(n[0]) + sgn(n[2]);
  const double s24 = sgn(n[1]) + sgn(n[3]);
  if (s13 != 0) out += s13 * M_star((a2 * n[2] + 2 * a3 * n[3]) / std::sqrt(a3));
  if (s24 != 0) out += s24 * M_star((2 * a1 * n[2] + a2 * n[3]) / std::sqrt(a1));
  return out;
}

double P0(const QuadForm& f, double n1, double n2) { return P_minus(f, {0, 0, n1, n2}); }

ThetaSum theta_minus(const IndefiniteSpec& spec, cplx<double> tau, double tail) {
  return shell_sum(spec, tau, tail, [&](const Vec4& x) { return P_minus(spec.form, x); });
}

ThetaSum theta_completed_radius(const IndefiniteSpec& spec, cplx<double> tau, double radius) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  const double step = 0.5;
  const auto buckets = rho_buckets(spec, tau, radius, step);
  ThetaSum out;
  for (const auto& b : buckets) {
    out.value += b.value;
    out.terms += b.count;
  }
  out.radius = radius;
  out.last_shell = buckets.empty() ? 0 : buckets.back().abs_sum;
  return out;
}

ThetaSum theta_completed(const IndefiniteSpec& spec, cplx<double> tau, double tail) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  const double step = 0.5, v = tau.imag();
  const double r_max = 80.0 / (2 * kPi * v) + 4;
  double R = std::max(2.0, 6.0 / (2 * kPi * v));
  double last = 0;
  while (true) {
    const auto buckets = rho_buckets(spec, tau, R, step);
    const std::size_t nb = buckets.size();
    last = buckets[nb - 1].abs_sum;
    if (nb >= 3 && buckets[nb - 1].count > 0 && buckets[nb - 1].abs_sum < tail / 10 &&
        buckets[nb - 2].abs_sum < tail / 10) {
      ThetaSum out;
      for (const auto& b : buckets) {
        out.value += b.value;
        out.terms += b.count;
      }
      out.radius = R;
      out.last_shell = last;
      return out;
    }
    if (R >= r_max) throw TruncationError("completed indefinite theta shells did not settle", last);
    R = std::min(r_max, R * 1.5);
  }
}

cplx<double> theta_A0(const QuadForm& form, const std::array<Rational, 2>& c, cplx<double> tau, double tail) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  const double T = lattice_cutoff(2 * kPi * tau.imag(), form.lambda_min(), tail);
  C acc = 0;
  visit_plane(form, to_double(c[0]), to_double(c[1]), T,
              [&](double n1, double n2) { acc += std::exp(2.0 * kPi * kI * tau * form.eval(n1, n2)); });
  return acc;
}

cplx<double> theta_P0(const QuadForm& form, i64 s, const ShiftPair& alpha, cplx<double> tau, double tail) {
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
  (void)s;
  const double v = tau.imag(), sv = std::sqrt(v);
  const double T = lattice_cutoff(2 * kPi * v, form.lambda_min(), tail / 2);
  C acc = 0;
  visit_plane(form, to_double(alpha.alpha1()), to_double(alpha.alpha2()), T, [&](double n1, double n2) {
    if (n1 == 0 && n2 == 0) return;
    acc += P0(form, sv * n1, sv * n2) * std::exp(-2.0 * kPi * kI * tau * form.eval(n1, n2));
  });
  return acc;
}

FactorizationCheck factorization_check(const IndefiniteSpec& spec, cplx<double> tau, double tail) {
  FactorizationCheck out;
  out.lhs = theta_minus(spec, tau, tail).value;
  out.E_alpha = E_alpha_series(spec.form, spec.s, spec.alpha, tau, 1e-14);
  out.theta0 = theta_A0(spec.form, {spec.a[0] + spec.a[2], spec.a[1] + spec.a[3]}, tau);
  out.residual = std::abs(out.lhs - 2.0 * out.E_alpha * out.theta0);
  out.p0_residual = std::abs(theta_P0(spec.form, spec.s, spec.alpha, tau) - 2.0 * out.E_alpha);
  return out;
}

CompletionCheck completion_identity_check(const IndefiniteSpec& spec, int points, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  const auto& A = spec.A1;
  const std::array<Vec4, 6> dirs{to_vec(spec.C1), to_vec(spec.C2), to_vec(spec.C1p), to_vec(spec.C2p),
                                 perp(A, spec.C1, spec.C2), perp(A, spec.C2, spec.C1)};
  CompletionCheck out;
  while (out.points < points) {
    const Vec4 y{U(rng), U(rng), U(rng), U(rng)};
    const Vec4 x = scaled(y, 1.0 / kPScale);
    bool near = false;
    for (double c : y) near |= std::abs(c) < 1e-3;
    for (const auto& d : dirs) near |= std::abs(pair_d(A, d, x)) < 1e-3;
    if (near) continue;
    const double theorem = phi_hat_correction(spec, x);
    const double direct = P_full(spec.form, y) - P_sign(spec.form, y);
    out.max_residual = std::max(out.max_residual, std::abs(theorem - direct));
    out.max_scale_residual = std::max(out.max_scale_residual, std::abs(P_full(spec.form, y) - phi_hat(spec, x)));
    ++out.points;
  }
  return out;
}

}  // namespace qm
