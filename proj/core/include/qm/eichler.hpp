#pragma once

#include <array>
#include <vector>

#include "qm/domain.hpp"
#include "qm/precision.hpp"

namespace qm {

struct KappaFrame {
  double a1 = 1, a2 = 1, a3 = 1;
  double m = 0;      // sqrt(4 a3 - a2^2 / a1)
  double kappa = 0;  // a2 / sqrt(D)

  explicit KappaFrame(const QuadForm& form);
  // u(n1, n2) sqrt(v)
  std::array<double, 2> u(double n1, double n2, double v) const;
  // coordinates x1 = u1 - kappa u2, x2 = u2
  std::array<double, 2> x(double n1, double n2, double v) const;
};

struct CharEntry {
  std::array<i64, 2> residue;
  Rational weight;
  int source = 0;  // index into jstar
};

struct ThetaCharSet {
  i64 modA = 1, modB = 1;
  std::vector<CharEntry> A, B;
  bool constant_A = false, constant_B = false;
};

ThetaCharSet theta_char_sets(const FamilySpec& spec);

// E_alpha(tau) = 1/2 sum_{n in alpha + Z^2} M2(kappa; u(n) sqrt v) q^(-Q(n)); no family validation
cplx<double> E_alpha_series(const QuadForm& form, i64 s, const ShiftPair& alpha, cplx<double> tau,
                            double tail = 1e-13);

// E(tau) = 1/2 sum_{jstar} eps sum_{n in alpha + Z^2} M2(kappa; u(n) sqrt v) q^(-Q(n))
cplx<double> E_m2_series(const FamilySpec& spec, cplx<double> tau, double tail = 1e-13);

// lattice data of the series above at fixed v, reusable across real parts h/k
class EM2Lattice {
 public:
  EM2Lattice(const FamilySpec& spec, double v, double tail, Precision prec);
  // E(h/k + i v) with exact phases
  cplx<xreal> at(const QPoint& p) const;
  std::size_t size() const { return qint_.size(); }

 private:
  i64 s_ = 1;
  std::vector<i64> qint_;
  std::vector<xreal> value_;
};

// iterated vertical-path quadrature of the theta integrands
cplx<double> quadrature_E(const FamilySpec& spec, cplx<double> tau, double tol = 1e-11);

// calligraphic E(tau) = E(s tau) through the residue sets A and B; prefactors -sqrt(D) / (4 a s)
cplx<double> shimura_form_E(const FamilySpec& spec, cplx<double> tau, double tol = 1e-11);

struct EStarDecomposition {
  cplx<double> E_star, H1, H2;
  cplx<double> total() const { return E_star + H1 + H2; }
};

EStarDecomposition E_star_decomposition(const FamilySpec& spec, cplx<double> tau, double tail = 1e-13);

struct DepthTwoReport {
  cplx<double> I_fg, I_FG, J0, I_f, r_f, r_g;
  double residual = 0;           // I_fg - (-i tau)^-1 I_FG(-1/tau) - (J0 + I_f r_g - r_f r_g)
  double residual_plus_sign = 0; // same with +(-i tau)^-1 I_FG
};

// component (A1, A2) of the A-part: f = Theta_1(2a1s, A1, 2a1s), g = Theta_1(2Da1s, D A2, 2Da1s)
DepthTwoReport depth_two_transform_residual(const FamilySpec& spec, cplx<double> tau, std::array<i64, 2> charA,
                                            double tol = 1e-12);

// error of modularity int_0^{i inf} Theta_1(N, h, N; w) (-i(w + tau))^(-1/2) dw, tau off the point 0
cplx<double> r_theta(i64 N, i64 h, cplx<double> tau, double tol = 1e-12);

}  // namespace qm
