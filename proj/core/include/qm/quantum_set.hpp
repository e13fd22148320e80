#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qm/domain.hpp"
#include "qm/precision.hpp"

namespace qm {

struct GaussSumTriple {
  i64 a = 1;
  i64 b = 0;
  i64 c = 1;
};

cplx<double> gauss_sum(const GaussSumTriple& g);

// which clause of the vanishing lemma applies (0 if none)
int gauss_vanishing_clause(const GaussSumTriple& g);
inline bool gauss_vanishes(const GaussSumTriple& g) { return gauss_vanishing_clause(g) != 0; }

// sum over alpha in J of eps(alpha) sum_{l mod ks/delta} e(h Q(l + alpha) / k)
cplx<double> main_term_sum(const FamilySpec& spec, const QPoint& p);

inline constexpr double kVanishTol = 1e-10;

std::set<i64> g_set(const FamilySpec& spec);
// Q(x) mod s constant across J
bool congruence_condition(const FamilySpec& spec);

struct ExponentOptions {
  int n_max = 8;
  // test points whose l-range ks/delta exceeds this are skipped
  i64 max_period = 2048;
};

struct ExponentResult {
  std::optional<int> n;  // empty when no n <= n_max works
  int floor = 1;
  bool higher_power_failure = false;  // vanishing at n but not at some tested higher power
  int points_tested = 0;
  std::string note;
};

ExponentResult determine_exponent(const FamilySpec& spec, const ExponentOptions& opt = {});

struct MembershipRecord {
  QPoint point;
  bool in_q1 = false;
  bool in_q2 = false;
  bool in_q3 = false;
  std::optional<int> exponent_n;
  cplx<double> main_term;
  bool member() const { return in_q1 || in_q2 || in_q3; }
};

MembershipRecord membership(const FamilySpec& spec, const QPoint& p, const ExponentResult& exponent);
MembershipRecord membership(const FamilySpec& spec, const QPoint& p);

// true when every reduced fraction is a member: Q1 covers everything outside s-multiples and Q2, Q3 cover the rest
bool quantum_set_is_all(const FamilySpec& spec, const ExponentResult& exponent);

}  // namespace qm
