#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <string>
#include <vector>

#include "qm/rational.hpp"

namespace qm {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned kBernoulliMaxOrder = 64;

BigRational bernoulli_number(unsigned m);

// coefficient of x^j in B_m(x), j = 0..m
const std::vector<BigRational>& bernoulli_coeffs(unsigned m);

// exact B_m(x); m above kBernoulliMaxOrder throws std::out_of_range
BigRational bernoulli_poly(unsigned m, const BigRational& x);
BigRational bernoulli_poly(unsigned m, const Rational& x);

inline BigRational to_big(const Rational& r) { return BigRational(BigInt(r.numerator()), BigInt(r.denominator())); }

template <class R>
R big_to_real(const BigInt& n) {
  std::string digits = n.str();
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  R acc = 0;
  std::size_t pos = 0;
  while (pos < digits.size()) {
    std::size_t len = std::min<std::size_t>(15, digits.size() - pos);
    R scale = 1;
    for (std::size_t i = 0; i < len; ++i) scale *= 10;
    acc = acc * scale + R(std::stoll(digits.substr(pos, len)));
    pos += len;
  }
  return neg ? -acc : acc;
}

template <class R>
R to_real(const BigRational& r) {
  return big_to_real<R>(boost::multiprecision::numerator(r)) / big_to_real<R>(boost::multiprecision::denominator(r));
}
template <>
inline double to_real<double>(const BigRational& r) {
  return r.convert_to<double>();
}

}  // namespace qm
