#include "qm/bernoulli.hpp"

#include <stdexcept>

namespace qm {

namespace {

struct Tables {
  std::vector<BigRational> numbers;
  std::vector<std::vector<BigRational>> polys;

  Tables() {
    const unsigned n = kBernoulliMaxOrder;
    std::vector<std::vector<BigInt>> binom(n + 2, std::vector<BigInt>(n + 2));
    for (unsigned i = 0; i <= n + 1; ++i) {
      binom[i][0] = binom[i][i] = 1;
      for (unsigned j = 1; j < i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
    }
    numbers.assign(n + 1, BigRational(0));
    numbers[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
      BigRational acc = 0;
      for (unsigned k = 0; k < m; ++k) acc += BigRational(binom[m + 1][k]) * numbers[k];
      numbers[m] = -acc / BigRational(m + 1);
    }
    polys.resize(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
      polys[m].assign(m + 1, BigRational(0));
      for (unsigned k = 0; k <= m; ++k) polys[m][m - k] = BigRational(binom[m][k]) * numbers[k];
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

void check_order(unsigned m) {
  if (m > kBernoulliMaxOrder)
    throw std::out_of_range("Bernoulli order " + std::to_string(m) + " above supported bound " +
                            std::to_string(kBernoulliMaxOrder));
}

}  // namespace

BigRational bernoulli_number(unsigned m) {
  check_order(m);
  return tables().numbers[m];
}

const std::vector<BigRational>& bernoulli_coeffs(unsigned m) {
  check_order(m);
  return tables().polys[m];
}

BigRational bernoulli_poly(unsigned m, const BigRational& x) {
  const auto& c = bernoulli_coeffs(m);
  BigRational acc = 0;
  for (unsigned j = m + 1; j-- > 0;) acc = acc * x + c[j];
  return acc;
}

BigRational bernoulli_poly(unsigned m, const Rational& x) { return bernoulli_poly(m, to_big(x)); }

}  // namespace qm
