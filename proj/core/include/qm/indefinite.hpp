#pragma once

#include <array>
#include <string>
#include <vector>

#include "qm/domain.hpp"
#include "qm/precision.hpp"

namespace qm {

using Vec4i = std::array<i64, 4>;
using Vec4 = std::array<double, 4>;
using Mat4i = std::array<Vec4i, 4>;
using Vec4q = std::array<Rational, 4>;

// Gram pairing x^T A y
i64 pair(const Mat4i& A, const Vec4i& x, const Vec4i& y);
double pair(const Mat4i& A, const Vec4i& x, const Vec4& y);

struct IndefiniteSpec {
  QuadForm form;
  i64 s = 1;
  ShiftPair alpha;
  Mat4i A1{};
  std::array<std::array<i64, 2>, 2> A0{};
  Vec4i C1{}, C2{}, C1p{}, C2p{};
  Vec4q a;

  // Q1(n) = n^T A1 n / 2
  double Q1(const Vec4& n) const;
};

// block matrix [[A0, A0], [A0, 0]] and the standard C-vectors;
// (a1, a2) = A0^{-1} z / s, (a3, a4) = alpha
IndefiniteSpec make_indefinite_spec(const QuadForm& form, i64 s, const ShiftPair& alpha,
                                    std::array<i64, 2> z = {1, 0});

Vec4q admissible_shift(const QuadForm& form, i64 s, const ShiftPair& alpha, std::array<i64, 2> z);
// s A1 a integral and (a3, a4) = alpha
bool shift_admissible(const IndefiniteSpec& spec);

struct ConeCondition {
  int index = 0;  // 1..6
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ConeReport {
  std::vector<ConeCondition> conditions;
  std::array<int, 2> signature{};  // (positive, negative) eigenvalues of A1
  bool symmetric = false;
  i64 delta = 0;                    // B(C1,C1) B(C2,C2) - B(C1,C2)^2
  std::array<i64, 3> M00{};         // Delta_{122'}, D_{1'2'}, Delta_{11'2}
  bool all_pass() const;
};

// norms are B(C, C) throughout; exact in integers
ConeReport verify_cone_conditions(const IndefiniteSpec& spec);

// M(B(C,x) / sqrt(-B(C,C)))
double boosted_M(const Mat4i& A, const Vec4i& C, const Vec4& x);
// M2(-B(C1,C2)/sqrt(Delta); B(C2,x)/sqrt(-B(C2,C2)), B(C1perp2,x)/sqrt(-B(C1perp2,C1perp2)))
double boosted_M2(const Mat4i& A, const Vec4i& C1, const Vec4i& C2, const Vec4& x);

double phi(const IndefiniteSpec& spec, const Vec4& x);
// the three-term M2/M correction
double phi_hat_correction(const IndefiniteSpec& spec, const Vec4& x);
inline double phi_hat(const IndefiniteSpec& spec, const Vec4& x) { return phi(spec, x) + phi_hat_correction(spec, x); }

// P(x) = phi_hat(x / kPScale)
inline constexpr double kPScale = 0.70710678118654752440;

// explicit four-line P, its M2 slice P^-, its sign product, and the planar P0
double P_full(const QuadForm& form, const Vec4& n);
double P_minus(const QuadForm& form, const Vec4& n);
double P_sign(const QuadForm& form, const Vec4& n);
double P0(const QuadForm& form, double n1, double n2);

struct ThetaSum {
  cplx<double> value;
  double radius = 0;      // final majorant radius
  double last_shell = 0;  // sum of |terms| in the outermost shell
  std::size_t terms = 0;
};

// sum over a + Z^4 of P(sqrt v n) q^(Q1(n)), by shells of the majorant |A1|
ThetaSum theta_completed(const IndefiniteSpec& spec, cplx<double> tau, double tail = 1e-10);
ThetaSum theta_minus(const IndefiniteSpec& spec, cplx<double> tau, double tail = 1e-10);
// fixed radius variant for doubling checks
ThetaSum theta_completed_radius(const IndefiniteSpec& spec, cplx<double> tau, double radius);

// sum over c + Z^2 of q^(Q(n))
cplx<double> theta_A0(const QuadForm& form, const std::array<Rational, 2>& c, cplx<double> tau, double tail = 1e-14);
// sum over alpha + Z^2 of P0(sqrt v n) q^(-Q(n))
cplx<double> theta_P0(const QuadForm& form, i64 s, const ShiftPair& alpha, cplx<double> tau, double tail = 1e-14);

struct FactorizationCheck {
  cplx<double> lhs;      // theta_minus
  cplx<double> E_alpha;  // from the eichler series
  cplx<double> theta0;   // theta_A0 at (a1 + a3, a2 + a4)
  double residual = 0;   // |lhs - 2 E_alpha theta0|
  double p0_residual = 0;  // |theta_P0 - 2 E_alpha|
};

FactorizationCheck factorization_check(const IndefiniteSpec& spec, cplx<double> tau, double tail = 1e-10);

struct CompletionCheck {
  int points = 0;
  double max_residual = 0;  // theorem display against the P-based assembly
  double max_scale_residual = 0;  // P against phi_hat at the scaled argument
};

// random x off the sign loci, seeded
CompletionCheck completion_identity_check(const IndefiniteSpec& spec, int points, unsigned seed);

}  // namespace qm
