#pragma once

#include <vector>

#include "qm/asymptotics.hpp"
#include "qm/domain.hpp"
#include "qm/fit.hpp"
#include "qm/precision.hpp"

namespace qm {

// t = 10^-1, 10^-1.5, ..., 10^-3
std::vector<double> agreement_t_grid();

struct SlopeSeries {
  QPoint point;
  Side side = Side::F;
  std::vector<double> t;
  std::vector<double> residual;
  std::vector<double> local;  // consecutive log-log slopes
  LineFit fit;
  bool pass = false;
};

struct AgreementReport {
  int order = 3;
  double min_slope = 3.9;
  std::vector<SlopeSeries> series;
  bool pass() const;
};

// F side: |F(e(h/k) e^-t) - sum_{m<=M} a(m) t^m|
// E side: |E(-h/k + it/2pi) - sum_{m<=M} a(m) (-t)^m| with a(m) from the canonical representatives
AgreementReport verify_agreement(const FamilySpec& spec, const std::vector<QPoint>& points, int M, Precision prec,
                                 double min_slope = 3.9);

}  // namespace qm
