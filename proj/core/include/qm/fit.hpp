#pragma once

#include <vector>

namespace qm {

struct LineFit {
  double slope = 0;
  double intercept = 0;
};

// least squares line through (log x, log y)
LineFit loglog_fit(const std::vector<double>& x, const std::vector<double>& y);
// slopes between consecutive points in log-log scale
std::vector<double> local_slopes(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qm
