#include "qm/verify.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

#include "qm/eichler.hpp"
#include "qm/partial_theta.hpp"

namespace qm {

std::vector<double> agreement_t_grid() {
  std::vector<double> t;
  for (int j = 2; j <= 6; ++j) t.push_back(std::pow(10.0, -0.5 * j));
  return t;
}

bool AgreementReport::pass() const {
  if (series.empty()) return false;
  for (const auto& s : series)
    if (!s.pass) return false;
  return true;
}

namespace {

void finish(SlopeSeries& s, double min_slope) {
  s.fit = loglog_fit(s.t, s.residual);
  s.local = local_slopes(s.t, s.residual);
  s.pass = std::isfinite(s.fit.slope) && s.fit.slope >= min_slope;
}

}  // namespace

AgreementReport verify_agreement(const FamilySpec& spec, const std::vector<QPoint>& points, int M, Precision prec,
                                 double min_slope) {
  AgreementReport rep;
  rep.order = M;
  rep.min_slope = min_slope;
  const auto grid = agreement_t_grid();
  const bool ext = prec == Precision::extended;
  const double tail = ext ? 1e-24 : 1e-15;

  std::vector<AsymptoticSeries> fseries;
  for (const auto& p : points) fseries.push_back(expand_F(spec, p, M));
  for (std::size_t i = 0; i < points.size(); ++i) {
    SlopeSeries s;
    s.point = points[i];
    s.side = Side::F;
    for (double t : grid) {
      const EvalRequest req{spec, points[i], t, tail};
      double r;
      if (ext)
        r = double(abs(eval_F<xreal>(req) - fseries[i].partial_sum_ext(xreal(t), M)));
      else
        r = std::abs(eval_F<double>(req) - fseries[i].partial_sum(t, M));
      s.t.push_back(t);
      s.residual.push_back(r);
    }
    finish(s, min_slope);
    rep.series.push_back(std::move(s));
  }

  const FamilySpec canon = canonical_representatives(spec);
  std::vector<AsymptoticSeries> cseries;
  for (const auto& p : points) cseries.push_back(expand_F(canon, p, M));
  std::vector<SlopeSeries> eside(points.size());
  const double two_pi = 2 * boost::math::constants::pi<double>();
  for (double t : grid) {
    const EM2Lattice lat(spec, t / two_pi, tail, prec);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const cplx<xreal> e = lat.at(points[i].negated());
      const cplx<xreal> a = cseries[i].partial_sum_ext(-xreal(t), M);
      eside[i].t.push_back(t);
      eside[i].residual.push_back(double(abs(e - a)));
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    eside[i].point = points[i];
    eside[i].side = Side::E;
    finish(eside[i], min_slope);
    rep.series.push_back(std::move(eside[i]));
  }
  return rep;
}

}  // namespace qm
