#include <gtest/gtest.h>

#include <cmath>

#include "qm/fixtures.hpp"
#include "qm/partial_theta.hpp"

using namespace qm;

namespace {
const double kPi = 3.14159265358979323846;

EvalRequest req(const FamilySpec& spec, QPoint p, double t) {
  EvalRequest r;
  r.spec = spec;
  r.point = p;
  r.t = t;
  return r;
}
}  // namespace

TEST(PartialTheta, PiecesSumToF) {
  const auto r = req(running_example(), QPoint::make(1, 3), 0.2);
  const auto f = eval_F<double>(r);
  const auto sum = eval_F1<double>(r) + eval_F2<double>(r) + eval_F3<double>(r);
  EXPECT_NEAR(std::abs(f - sum), 0, 1e-13);
}

TEST(PartialTheta, TauEntryAgrees) {
  const auto spec = running_example();
  for (auto [h, k] : {std::pair{0, 1}, {1, 2}, {2, 5}}) {
    const double t = 0.3;
    const auto a = eval_F<double>(req(spec, QPoint::make(h, k), t));
    const auto b = eval_F_tau(spec, {double(h) / k, t / (2 * kPi)});
    EXPECT_NEAR(std::abs(a - b), 0, 1e-12) << h << "/" << k;
  }
}

TEST(PartialTheta, ExtendedAgreesWithDouble) {
  const auto r = req(running_example(), QPoint::make(1, 2), 0.05);
  const auto a = eval_F<double>(r);
  const auto b = eval_F<xreal>(r);
  EXPECT_NEAR(std::abs(a - cplx<double>(double(b.real()), double(b.imag()))), 0, 1e-11);
}

TEST(PartialTheta, NoBoundaryPiecesForRunningExample) {
  const auto r = req(running_example(), QPoint::make(1, 3), 0.2);
  EXPECT_EQ(eval_F2<double>(r), cplx<double>(0));
  EXPECT_EQ(eval_F3<double>(r), cplx<double>(0));
}

TEST(PartialTheta, PairedBoundaryVanishes) {
  const auto r = req(fixture_paired_boundary(), QPoint::make(1, 3), 0.1);
  EXPECT_LT(std::abs(eval_F2<double>(r)), 1e-13);
}

TEST(PartialTheta, DirectSumAtLargeT) {
  const auto spec = running_example();
  const double t = 2.0;
  double brute = 0;
  for (const auto& w : derived_sets(spec).J) {
    const double a1 = to_double(w.alpha.alpha1()), a2 = to_double(w.alpha.alpha2());
    for (int m1 = 0; m1 < 30; ++m1)
      for (int m2 = 0; m2 < 30; ++m2) brute += to_double(w.eps) * std::exp(-t * spec.form.eval(a1 + m1, a2 + m2));
  }
  const auto f = eval_F<double>(req(spec, QPoint::make(0, 1), t));
  EXPECT_NEAR(f.imag(), 0, 1e-15);
  EXPECT_NEAR(f.real(), brute, 1e-12);
}

TEST(PartialTheta, CutoffGrowsAsTShrinks) {
  EXPECT_LT(lattice_cutoff(1.0, 0.5, 1e-14), lattice_cutoff(0.1, 0.5, 1e-14));
  EXPECT_LT(line_cutoff(1.0, 2.0, 1e-14), line_cutoff(0.01, 2.0, 1e-14));
}
