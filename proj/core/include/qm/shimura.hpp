#pragma once

#include <array>

#include "qm/domain.hpp"
#include "qm/precision.hpp"

namespace qm {

// sum over m = h mod N of m^nu q^(A m^2 / 2N^2); needs A | N, N | hA, Im tau > 0
cplx<double> shimura_theta(int nu, i64 A, i64 h, i64 N, cplx<double> tau, double tail = 1e-15);
// direct lattice sum, no modular transformation
cplx<double> shimura_theta_direct(int nu, i64 A, i64 h, i64 N, cplx<double> tau, double tail = 1e-15);

// Jacobi symbol (c/d) for odd d, extended to d < 0 by (c/d) = (c/|d|) sgn(c) and (0/1) = 1
int jacobi_symbol(i64 c, i64 d);
// 1 if d = 1 mod 4, i if d = 3 mod 4
cplx<double> eps_d(i64 d);

// |lhs - rhs| of the inversion law at tau
double shimura_S_transform_check(int nu, i64 A, i64 h, i64 N, cplx<double> tau);

using SL2 = std::array<i64, 4>;  // a b c d
// |lhs - rhs| of the law for M in Gamma0(2N) with b even; throws std::domain_error otherwise
double shimura_gamma0_check(int nu, i64 A, i64 h, i64 N, const SL2& M, cplx<double> tau);

}  // namespace qm
