#include <boost/math/special_functions/gamma.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "qm/asymptotics.hpp"
#include "qm/bernoulli.hpp"
#include "qm/eichler.hpp"
#include "qm/fixtures.hpp"
#include "qm/indefinite.hpp"
#include "qm/partial_theta.hpp"
#include "qm/quantum_set.hpp"
#include "qm/special.hpp"
#include "qm/verify.hpp"

using namespace qm;

namespace {

const double kPi = 3.14159265358979323846;
const cplx<double> I(0, 1);

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > limit_s) {
    o.pass = false;
    o.detail += " [over time budget]";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %s %s (%.2f s / %.0f s): %s\n", o.pass ? "PASS" : "FAIL", id, title, dt, limit_s, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome c1() {
  const auto spec = running_example();
  bool ok = spec.form.D() == 7 && g_set(spec) == std::set<i64>{1};
  std::set<i64> qmod;
  for (const auto& w : derived_sets(spec).J) {
    const i64 q = spec.form.value(w.alpha.n1(), w.alpha.n2());
    qmod.insert(((q % spec.s) + spec.s) % spec.s);
  }
  ok &= qmod == std::set<i64>{0} && congruence_condition(spec);
  const auto cs = theta_char_sets(spec);
  std::set<std::array<i64, 2>> A, B;
  for (const auto& e : cs.A) A.insert(e.residue);
  for (const auto& e : cs.B) B.insert(e.residue);
  const std::set<std::array<i64, 2>> A0{{5, 1}, {9, 5}, {13, 9}, {1, 13}, {2, 14}, {6, 2}, {10, 6}, {14, 10}};
  const std::set<std::array<i64, 2>> B0{{3, 1}, {7, 5}, {5, 1}, {1, 5}};
  ok &= cs.modA == 16 && cs.modB == 8 && A == A0 && B == B0 && cs.constant_A && cs.constant_B;
  std::ostringstream d;
  d << "D=" << spec.form.D() << " |G|=" << g_set(spec).size() << " |A|=" << A.size() << " |B|=" << B.size()
    << " Q(s alpha) mod s=" << *qmod.begin() << " constant=" << cs.constant_A << cs.constant_B;
  return {ok, d.str()};
}

Outcome c2() {
  int matched = 0, bad = 0;
  for (i64 a = 1; a <= 20; ++a)
    for (i64 b = 0; b <= 20; ++b)
      for (i64 c = 1; c <= 100; ++c) {
        const GaussSumTriple g{a, b, c};
        if (!gauss_vanishes(g)) continue;
        ++matched;
        if (std::abs(gauss_sum(g)) >= 1e-9) ++bad;
      }
  return {matched >= 10000 && bad == 0, std::to_string(matched) + " clause matches, " + std::to_string(bad) + " nonvanishing"};
}

Outcome c3() {
  const auto spec = running_example();
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<i64> K(1, 60);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const i64 k = K(rng);
    std::uniform_int_distribution<i64> H(-5 * k, 5 * k);
    i64 h = H(rng);
    while (std::gcd(h, k) != 1) h = H(rng);
    worst = std::max(worst, std::abs(main_term_sum(spec, QPoint::make(h, k))));
  }
  const auto adv = fixture_adversarial();
  const auto ex = determine_exponent(adv);
  double witness = 0;
  std::string at = "none";
  for (i64 k = 1; k <= 60 && witness <= 1e-6; ++k)
    for (i64 h = 0; h < k; ++h) {
      if (std::gcd(h, k) != 1) continue;
      const auto m = membership(adv, QPoint::make(h, k), ex);
      if (!m.member() && std::abs(m.main_term) > 1e-6) {
        witness = std::abs(m.main_term);
        at = m.point.str();
        break;
      }
    }
  return {worst < 1e-10 && witness > 1e-6 && !quantum_set_is_all(adv, ex),
          "max |main term| " + fmt("%.2e", worst) + " over 50 points; non-member " + at + " with |main term| " +
              fmt("%.3g", witness)};
}

Outcome c4() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> U(-3, 3), S(-2, 2);
  double gam = 0, even = 0, deriv = 0, jump = 0;
  for (int i = 0; i < 100; ++i) {
    double u = U(rng);
    if (u == 0) u = 0.5;
    const double g = boost::math::tgamma(0.5, kPi * u * u) / std::sqrt(kPi);
    gam = std::max({gam, std::abs(erf_E<double>(u) - sgn(u) * (1 - g)), std::abs(erf_M<double>(u) + sgn(u) * g),
                    std::abs(erf_E<double>(u) - sgn(u) - erf_M<double>(u))});
  }
  for (int i = 0; i < 100; ++i) {
    const double k = S(rng), u1 = S(rng), u2 = S(rng);
    even = std::max({even, std::abs(erf_M2<double>(k, u1, u2) - erf_M2<double>(k, -u1, -u2)),
                     std::abs(erf_E2<double>(k, u1, u2) - erf_E2<double>(k, -u1, -u2))});
  }
  const double h = 1e-5;
  int pts = 0;
  while (pts < 50) {
    const double k = S(rng) / 2, u1 = S(rng), u2 = S(rng);
    if (std::abs(u1) < 0.1 || std::abs(u2) < 0.1 || std::abs(u1 - k * u2) < 0.1) continue;
    auto m2 = [&](double a, double b) { return erf_M2<double>(k, a, b); };
    auto e2 = [&](double a, double b) { return erf_E2<double>(k, a, b); };
    auto rel = [&](DerivKind kind, double fd) {
      const double an = erf_derivative<double>(kind, k, u1, u2);
      return std::abs(an - fd) / std::max(std::abs(an), 1e-3);
    };
    deriv = std::max({deriv, rel(DerivKind::M2_10, (m2(u1 + h, u2) - m2(u1 - h, u2)) / (2 * h)),
                      rel(DerivKind::M2_01, (m2(u1, u2 + h) - m2(u1, u2 - h)) / (2 * h)),
                      rel(DerivKind::E2_10, (e2(u1 + h, u2) - e2(u1 - h, u2)) / (2 * h)),
                      rel(DerivKind::E2_01, (e2(u1, u2 + h) - e2(u1, u2 - h)) / (2 * h))});
    ++pts;
  }
  for (int i = 0; i < 50; ++i) {
    const double k = S(rng), y = U(rng), rk = std::sqrt(1 + k * k), e = 1e-12;
    if (std::abs(y) < 1e-3) continue;
    jump = std::max({jump, std::abs(erf_M2_x<double>(k, 0, y) - erf_M2_star_x<double>(k, e, y) - erf_M<double>(rk * y)),
                     std::abs(erf_M2_x<double>(k, y, 0) - erf_M2_star_x<double>(k, y, e) - erf_M<double>(y)),
                     std::abs(erf_M2_x<double>(k, e, y) - erf_M2_star_x<double>(k, 0, y, +1)),
                     std::abs(erf_M2_x<double>(k, y, -e) - erf_M2_star_x<double>(k, y, 0, 1, -1))});
  }
  const bool ok = gam < 1e-13 && even < 1e-12 && deriv < 1e-6 && jump < 1e-9;
  return {ok, "gamma " + fmt("%.1e", gam) + ", parity " + fmt("%.1e", even) + ", derivatives " + fmt("%.1e", deriv) +
                  ", jumps " + fmt("%.1e", jump)};
}

Outcome c5() {
  const auto spec = running_example();
  const std::vector<QPoint> pts{QPoint::make(0, 1), QPoint::make(1, 2), QPoint::make(1, 3), QPoint::make(2, 5)};
  const auto rep = verify_agreement(spec, pts, 3, has_float128 ? Precision::extended : Precision::standard);
  std::ostringstream d;
  d << (has_float128 ? "extended" : "long double") << "; slopes";
  for (const auto& s : rep.series) {
    d << " " << s.point.str() << (s.side == Side::F ? "F" : "E") << "=" << fmt("%.2f", s.fit.slope);
    if (!s.pass && !s.local.empty()) d << "(last local " << fmt("%.2f", s.local.back()) << ")";
  }
  d << "; need >= " << rep.min_slope;
  // diagnostic only: the remainder after M terms approaches a(M+1) t^(M+1)
  d << "; (F - S3)/(a4 t^4) - 1 at t=5e-4:";
  for (const auto& p : pts) {
    const auto a = expand_F(spec, p, 4);
    EvalRequest r;
    r.spec = spec;
    r.point = p;
    r.t = 5e-4;
    r.tail_bound = 1e-26;
    const auto rem = eval_F<xreal>(r) - a.partial_sum_ext(xreal(r.t), 3);
    const cplx<double> q(double(rem.real()), double(rem.imag()));
    d << " " << p.str() << " " << fmt("%.1e", std::abs(q / std::pow(r.t, 4) / a.coeffs[4] - 1.0));
  }
  return {rep.pass(), d.str()};
}

Outcome c6() {
  double q = 0, dec = 0;
  for (const auto& f : all_fixtures())
    for (cplx<double> tau : {I, 2.0 * I, 1.0 / 3 + 0.5 * I}) {
      const auto e = E_m2_series(f.spec, tau);
      q = std::max(q, std::abs(e - quadrature_E(f.spec, tau)));
      dec = std::max(dec, std::abs(E_star_decomposition(f.spec, tau).total() - e));
    }
  return {q < 1e-6 && dec < 1e-9,
          std::to_string(all_fixtures().size()) + " fixtures: |series - quadrature| " + fmt("%.1e", q) +
              ", |decomposition - series| " + fmt("%.1e", dec)};
}

Outcome c7() {
  const auto spec = running_example();
  const auto cs = theta_char_sets(spec);
  std::ostringstream d;
  int good = 0;
  std::set<std::array<i64, 2>> seen;
  for (const auto& e : cs.A) {
    if (!seen.insert(e.residue).second || seen.size() > 2) continue;
    const auto r = depth_two_transform_residual(spec, I, e.residue);
    if (r.residual < 1e-5) ++good;
    d << "(" << e.residue[0] << "," << e.residue[1] << ") " << fmt("%.1e", r.residual) << " [opposite sign "
      << fmt("%.2f", r.residual_plus_sign) << "]; ";
  }
  d << good << " components below 1e-5";
  return {good >= 2, d.str()};
}

Outcome c8() {
  bool cones = true;
  double fac = 0, p0 = 0;
  for (const auto& f : all_fixtures())
    for (const auto& w : f.spec.jstar) {
      const auto ind = make_indefinite_spec(f.spec.form, f.spec.s, w.alpha);
      cones &= verify_cone_conditions(ind).all_pass();
    }
  const auto spec = running_example();
  for (const auto& w : spec.jstar) {
    const auto ind = make_indefinite_spec(spec.form, spec.s, w.alpha);
    for (cplx<double> tau : {I, 2.0 * I}) {
      const auto fc = factorization_check(ind, tau);
      fac = std::max(fac, fc.residual);
      p0 = std::max(p0, fc.p0_residual);
    }
  }
  const auto cc = completion_identity_check(make_indefinite_spec(spec.form, spec.s, spec.jstar[0].alpha), 100, 8);
  const auto th = theta_completed(make_indefinite_spec(spec.form, spec.s, spec.jstar[0].alpha), I);
  const bool ok = cones && fac < 1e-6 && p0 < 1e-6 && cc.points == 100 && cc.max_residual < 1e-12;
  return {ok, std::string("cones ") + (cones ? "all pass" : "FAIL") + ", factorization " + fmt("%.1e", fac) +
                  ", P0 " + fmt("%.1e", p0) + ", completion " + fmt("%.1e", cc.max_residual) +
                  ", completed theta(i) = " + fmt("%.11f", th.value.real())};
}

Outcome c9() {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 23);
  bool exact = true;
  for (int i = 0; i < 20; ++i) {
    const Rational x(num(rng), den(rng));
    for (unsigned m = 0; m <= 16; ++m)
      exact &= bernoulli_poly(m, Rational(1) - x) == BigRational(m % 2 ? -1 : 1) * bernoulli_poly(m, x);
  }
  double diff = 0, half_full = 0;
  bool half_zero = true;
  for (const auto& f : all_fixtures()) {
    const auto ex = determine_exponent(f.spec);
    for (auto [h, k] : {std::pair{0, 1}, {1, 2}, {1, 3}, {2, 5}, {3, 7}}) {
      const auto p = QPoint::make(h, k);
      if (!membership(f.spec, p, ex).member()) continue;
      const auto a = expand_F(f.spec, p, 6, {AssemblyMode::shortcut});
      const auto b = expand_F(f.spec, p, 6, {AssemblyMode::full});
      for (std::size_t m = 0; m < a.coeffs.size(); ++m) diff = std::max(diff, std::abs(a.coeffs[m] - b.coeffs[m]));
      for (auto c : a.half_coeffs) half_zero &= c == cplx<double>(0);
      for (auto c : b.half_coeffs) half_full = std::max(half_full, std::abs(c));
    }
  }
  return {exact && half_zero && diff < 1e-12 && half_full < 1e-12,
          std::string("reflection ") + (exact ? "exact" : "BROKEN") + ", shortcut vs full " + fmt("%.1e", diff) +
              ", half slots " + (half_zero ? "0" : "nonzero") + " / " + fmt("%.1e", half_full)};
}

}  // namespace

int main() {
  run("C1", "running-example structure", 1, c1);
  run("C2", "Gauss-sum vanishing lemma", 30, c2);
  run("C3", "main-term vanishing", 60, c3);
  run("C4", "special-function consistency", 30, c4);
  run("C5", "asymptotic agreement at 0/1 1/2 1/3 2/5", 600, c5);
  run("C6", "representation agreement", 300, c6);
  run("C7", "depth-two transformation", 600, c7);
  run("C8", "indefinite theta completion", 300, c8);
  run("C9", "Bernoulli reflection and parity", 60, c9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures ? 1 : 0;
}
