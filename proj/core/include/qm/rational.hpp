#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace qm {

using Rational = boost::rational<std::int64_t>;

// "p/q" or "p"; throws std::invalid_argument
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }
std::int64_t floor_of(const Rational& r);
inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}
template <class R>
R to_real(const Rational& r) {
  return R(r.numerator()) / R(r.denominator());
}

}  // namespace qm
