#include "qm/quantum_set.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace qm {

namespace {

i64 mulmod(i64 a, i64 b, i64 m) {
  __int128 r = (static_cast<__int128>(a) * b) % m;
  if (r < 0) r += m;
  return static_cast<i64>(r);
}

bool pow_fits(i64 s, int n, i64 limit, i64& out) {
  __int128 v = 1;
  for (int i = 0; i < n; ++i) {
    v *= s;
    if (v > limit) return false;
  }
  out = static_cast<i64>(v);
  return true;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> p;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) p.push_back(n);
  return p;
}

}  // namespace

cplx<double> gauss_sum(const GaussSumTriple& g) {
  if (g.c < 1) throw std::invalid_argument("Gauss sum modulus must be positive");
  cplx<double> acc = 0;
  for (i64 n = 0; n < g.c; ++n) {
    i64 e = (mulmod(g.a, mulmod(n, n, g.c), g.c) + mulmod(g.b, n, g.c)) % g.c;
    acc += unit_root<double>(e, g.c);
  }
  return acc;
}

int gauss_vanishing_clause(const GaussSumTriple& g) {
  i64 d = std::gcd(g.a, g.c);
  if (d > 1 && g.b % d != 0) return 1;
  if (g.c % 4 == 0 && g.b % 2 != 0 && d == 1) return 2;
  if (g.c % 4 == 2 && d == 1 && g.b == 0) return 3;
  return 0;
}

cplx<double> main_term_sum(const FamilySpec& spec, const QPoint& p) {
  auto sets = derived_sets(spec);
  const i64 s = spec.s;
  const i64 K = p.k * s / p.delta(s);
  const i64 mod = p.k * s * s;
  const i64 h = ((p.h % mod) + mod) % mod;
  std::vector<cplx<double>> table(static_cast<std::size_t>(mod));
  for (i64 j = 0; j < mod; ++j) table[j] = unit_root<double>(j, mod);
  cplx<double> total = 0;
  for (const auto& ws : sets.J) {
    cplx<double> inner = 0, comp = 0;
    for (i64 l1 = 0; l1 < K; ++l1) {
      i64 X = s * l1 + ws.alpha.n1();
      for (i64 l2 = 0; l2 < K; ++l2) {
        i64 Y = s * l2 + ws.alpha.n2();
        i64 q = spec.form.value(X, Y) % mod;
        cplx<double> y = table[mulmod(h, q, mod)] - comp;
        cplx<double> t = inner + y;
        comp = (t - inner) - y;
        inner = t;
      }
    }
    total += to_double(ws.eps) * inner;
  }
  return total;
}

std::set<i64> g_set(const FamilySpec& spec) {
  std::set<i64> G;
  for (const auto& ws : derived_sets(spec).J) G.insert(g_of(spec, ws.alpha));
  return G;
}

bool congruence_condition(const FamilySpec& spec) {
  auto sets = derived_sets(spec);
  const i64 s = spec.s;
  bool first = true;
  i64 ref = 0;
  for (const auto& ws : sets.J) {
    i64 v = ((spec.form.value(ws.alpha.x1, ws.alpha.x2) % s) + s) % s;
    if (first) ref = v, first = false;
    else if (v != ref) return false;
  }
  return true;
}

namespace {

struct Probe {
  bool all_vanish = true;
  int tested = 0;
  std::string first_failure;
};

Probe probe_power(const FamilySpec& spec, int n, const ExponentOptions& opt) {
  Probe pr;
  const i64 s = spec.s;
  i64 sn = 0;
  if (!pow_fits(s, n, i64(1) << 40, sn)) return pr;
  auto test = [&](i64 h, i64 k) {
    if (std::gcd(h, k) != 1) return;
    QPoint p = QPoint::make(h, k);
    if (p.k * s / p.delta(s) > opt.max_period) return;
    ++pr.tested;
    if (std::abs(main_term_sum(spec, p)) >= kVanishTol && pr.all_vanish) {
      pr.all_vanish = false;
      pr.first_failure = p.str();
    }
  };
  // numerator side: h in s^n Z
  const i64 small[] = {1, 2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
  for (i64 c : {1, 2, 3, 5, 7})
    for (i64 k : small) test(sn * c, k);
  // denominator side: prime powers of the primes of s, times small cofactors
  std::vector<i64> dens;
  for (i64 p : prime_factors(s)) {
    i64 pj = 1;
    for (int j = 0; j <= opt.n_max + 2; ++j, pj *= p)
      if (pj % sn == 0) dens.push_back(pj);
  }
  for (i64 m : {1, 3, 5, 7})
    if (std::gcd(m, s) == 1) dens.push_back(sn * m);
  for (i64 k : dens)
    for (i64 h : {1, -1, 3, 5, 7, 11}) test(h, k);
  return pr;
}

}  // namespace

ExponentResult determine_exponent(const FamilySpec& spec, const ExponentOptions& opt) {
  ExponentResult res;
  derived_sets(spec);
  res.floor = congruence_condition(spec) ? 1 : 2;
  if (spec.s == 1) {
    res.n = 1;
    res.floor = 1;
    res.note = "s = 1: main term vanishes identically";
    return res;
  }
  for (int n = res.floor; n <= opt.n_max; ++n) {
    Probe pr = probe_power(spec, n, opt);
    res.points_tested += pr.tested;
    if (pr.tested == 0) {
      res.note = "no admissible test points at n = " + std::to_string(n);
      break;
    }
    if (pr.all_vanish) {
      res.n = n;
      for (int m = n + 1; m <= std::min(opt.n_max, n + 2); ++m) {
        Probe hp = probe_power(spec, m, opt);
        res.points_tested += hp.tested;
        if (!hp.all_vanish) {
          res.higher_power_failure = true;
          res.note = "vanishing fails at power " + std::to_string(m) + " (" + hp.first_failure + ")";
        }
      }
      return res;
    }
  }
  if (res.note.empty()) res.note = "no exponent up to " + std::to_string(opt.n_max);
  return res;
}

MembershipRecord membership(const FamilySpec& spec, const QPoint& p, const ExponentResult& ex) {
  MembershipRecord rec;
  rec.point = p;
  rec.exponent_n = ex.n;
  const i64 s = spec.s;
  auto G = g_set(spec);
  i64 sd = s / p.delta(s), sg = s / p.gamma(s);
  rec.in_q1 = true;
  for (i64 g : G)
    if (g % sd == 0 || g % sg == 0) rec.in_q1 = false;
  rec.main_term = main_term_sum(spec, p);
  bool vanish = std::abs(rec.main_term) < kVanishTol;
  if (ex.n) {
    i64 sn = 0;
    bool fits = pow_fits(s, *ex.n, std::numeric_limits<i64>::max() / 4, sn);
    rec.in_q2 = vanish && (p.h == 0 || (fits && p.h % sn == 0));
    rec.in_q3 = vanish && fits && p.k % sn == 0;
  }
  return rec;
}

MembershipRecord membership(const FamilySpec& spec, const QPoint& p) {
  return membership(spec, p, determine_exponent(spec));
}

bool quantum_set_is_all(const FamilySpec& spec, const ExponentResult& ex) {
  if (!ex.n) return false;
  const i64 s = spec.s;
  auto G = g_set(spec);
  std::vector<i64> divs;
  for (i64 d = 1; d <= s; ++d)
    if (s % d == 0) divs.push_back(d);
  for (i64 dl : divs)
    for (i64 gm : divs) {
      if (std::gcd(dl, gm) != 1) continue;
      if (*ex.n == 1 && (dl == s || gm == s)) continue;
      for (i64 g : G)
        if (g % (s / dl) == 0 || g % (s / gm) == 0) return false;
    }
  return true;
}

}  // namespace qm
