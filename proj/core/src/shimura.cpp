#include "qm/shimura.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <stdexcept>

namespace qm {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

void check_args(i64 A, i64 h, i64 N, cplx<double> tau) {
  if (A < 1 || N < 1 || N % A != 0 || (h * A) % N != 0)
    throw std::domain_error("Shimura theta needs A | N and N | hA");
  if (!(tau.imag() > 0)) throw std::domain_error("tau must lie in the upper half plane");
}

i64 mod_pos(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

cplx<double> shimura_theta_direct(int nu, i64 A, i64 h, i64 N, cplx<double> tau, double tail) {
  check_args(A, h, N, tau);
  const double c = kPi * tau.imag() * double(A) / (double(N) * double(N));
  // |m|^nu exp(-c m^2) summed beyond |m| > R is below tail
  double R = std::sqrt(std::max(1.0, std::log(1.0 / tail) + 10.0) / c) + N;
  const i64 r = mod_pos(h, N);
  const cplx<double> z = cplx<double>(0, 2 * kPi) * tau * (double(A) / (2.0 * double(N) * double(N)));
  cplx<double> acc = 0;
  const i64 jmax = static_cast<i64>(R / N) + 2;
  for (i64 j = -jmax; j <= jmax; ++j) {
    double m = double(r + N * j);
    if (std::abs(m) > R) continue;
    cplx<double> term = std::exp(z * (m * m));
    acc += nu ? m * term : term;
  }
  return acc;
}

cplx<double> shimura_theta(int nu, i64 A, i64 h, i64 N, cplx<double> tau, double tail) {
  check_args(A, h, N, tau);
  // reflect through the inversion law when that raises the imaginary part
  if (std::abs(tau) >= 1.0 || (-1.0 / tau).imag() < 1e-3) return shimura_theta_direct(nu, A, h, N, tau, tail);
  const cplx<double> tp = -1.0 / tau;
  const cplx<double> I(0, 1);
  cplx<double> acc = 0;
  for (i64 k = 0; k < N; ++k) {
    if ((A * k) % N != 0) continue;
    i64 num = mod_pos(A * k % (N * N) * mod_pos(h, N * N) % (N * N), N * N);
    double ang = 2 * kPi * double(num) / double(N * N);
    acc += cplx<double>(std::cos(ang), std::sin(ang)) * shimura_theta_direct(nu, A, k, N, tp, tail);
  }
  cplx<double> pre = std::pow(-I * tp, 0.5 + nu) / std::sqrt(double(A));
  if (nu) pre *= -I;
  return pre * acc;
}

int jacobi_symbol(i64 c, i64 d) {
  if (d % 2 == 0) throw std::domain_error("Jacobi symbol needs odd d");
  int sign = 1;
  if (d < 0) {
    d = -d;
    if (c < 0) sign = -1;
  }
  i64 a = mod_pos(c, d);
  int r = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 m8 = d % 8;
      if (m8 == 3 || m8 == 5) r = -r;
    }
    std::swap(a, d);
    if (a % 4 == 3 && d % 4 == 3) r = -r;
    a %= d;
  }
  return d == 1 ? sign * r : 0;
}

cplx<double> eps_d(i64 d) {
  if (d % 2 == 0) throw std::domain_error("eps_d needs odd d");
  return mod_pos(d, 4) == 1 ? cplx<double>(1, 0) : cplx<double>(0, 1);
}

double shimura_S_transform_check(int nu, i64 A, i64 h, i64 N, cplx<double> tau) {
  check_args(A, h, N, tau);
  const cplx<double> I(0, 1);
  cplx<double> lhs = shimura_theta_direct(nu, A, h, N, -1.0 / tau);
  cplx<double> acc = 0;
  for (i64 k = 0; k < N; ++k) {
    if ((A * k) % N != 0) continue;
    double ang = 2 * kPi * double(mod_pos(A * k * h, N * N)) / double(N * N);
    acc += cplx<double>(std::cos(ang), std::sin(ang)) * shimura_theta_direct(nu, A, k, N, tau);
  }
  cplx<double> rhs = std::pow(-I * tau, 0.5 + nu) / std::sqrt(double(A)) * acc;
  if (nu) rhs *= -I;
  return std::abs(lhs - rhs);
}

double shimura_gamma0_check(int nu, i64 A, i64 h, i64 N, const SL2& M, cplx<double> tau) {
  check_args(A, h, N, tau);
  const auto [a, b, c, d] = M;
  if (a * d - b * c != 1 || c % (2 * N) != 0 || b % 2 != 0)
    throw std::domain_error("matrix must lie in Gamma0(2N) with b even");
  cplx<double> Mt = (double(a) * tau + double(b)) / (double(c) * tau + double(d));
  cplx<double> lhs = shimura_theta_direct(nu, A, h, N, Mt);
  double ang = 2 * kPi * double(mod_pos(a * b * A % (2 * N * N) * (h * h % (2 * N * N)), 2 * N * N)) / double(2 * N * N);
  cplx<double> rhs = cplx<double>(std::cos(ang), std::sin(ang)) * double(jacobi_symbol(2 * A * c, d)) * std::pow(eps_d(d), -1 - 2 * nu) *
                     std::pow(double(c) * tau + double(d), 0.5 + nu) * shimura_theta_direct(nu, A, a * h, N, tau);
  return std::abs(lhs - rhs);
}

}  // namespace qm
