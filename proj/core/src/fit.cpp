#include "qm/fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace qm {

LineFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need at least two points");
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    A(i, 0) = std::log(x[i]);
    A(i, 1) = 1.0;
    b(i) = std::log(y[i]);
  }
  Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
  return {c(0), c(1)};
}

std::vector<double> local_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> out;
  for (std::size_t i = 1; i < x.size(); ++i)
    out.push_back(std::log(y[i] / y[i - 1]) / std::log(x[i] / x[i - 1]));
  return out;
}

}  // namespace qm
