#include <benchmark/benchmark.h>

#include "qm/asymptotics.hpp"
#include "qm/eichler.hpp"
#include "qm/fixtures.hpp"
#include "qm/indefinite.hpp"
#include "qm/partial_theta.hpp"
#include "qm/quantum_set.hpp"
#include "qm/special.hpp"

using namespace qm;

static void BM_erf_M2(benchmark::State& st) {
  double u = 0.1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(erf_M2<double>(0.377964473, u, 0.7 - u));
    u += 1e-7;
  }
}
BENCHMARK(BM_erf_M2);

static void BM_erf_M2_ext(benchmark::State& st) {
  xreal u = 0.1;
  for (auto _ : st) benchmark::DoNotOptimize(erf_M2<xreal>(xreal(0.377964473), u, xreal(0.7)));
}
BENCHMARK(BM_erf_M2_ext);

static void BM_gauss_sum(benchmark::State& st) {
  const i64 c = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(gauss_sum({7, 3, c}));
}
BENCHMARK(BM_gauss_sum)->Arg(64)->Arg(1024);

static void BM_main_term_sum(benchmark::State& st) {
  const auto spec = running_example();
  const auto p = QPoint::make(7, st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(main_term_sum(spec, p));
}
BENCHMARK(BM_main_term_sum)->Arg(13)->Arg(59);

static void BM_eval_F(benchmark::State& st) {
  const EvalRequest req{running_example(), QPoint::make(1, 3), 1.0 / double(st.range(0)), 1e-15};
  for (auto _ : st) benchmark::DoNotOptimize(eval_F<double>(req));
}
BENCHMARK(BM_eval_F)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_expand_F(benchmark::State& st) {
  const auto spec = running_example();
  for (auto _ : st) benchmark::DoNotOptimize(expand_F(spec, QPoint::make(2, 5), int(st.range(0))));
}
BENCHMARK(BM_expand_F)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_E_m2_series(benchmark::State& st) {
  const auto spec = running_example();
  for (auto _ : st) benchmark::DoNotOptimize(E_m2_series(spec, {1.0 / 3, 0.5}));
}
BENCHMARK(BM_E_m2_series)->Unit(benchmark::kMillisecond);

static void BM_quadrature_E(benchmark::State& st) {
  const auto spec = running_example();
  for (auto _ : st) benchmark::DoNotOptimize(quadrature_E(spec, {0, 1}));
}
BENCHMARK(BM_quadrature_E)->Unit(benchmark::kMillisecond);

static void BM_theta_completed(benchmark::State& st) {
  const auto spec = running_example();
  const auto is = make_indefinite_spec(spec.form, spec.s, spec.jstar[0].alpha);
  for (auto _ : st) benchmark::DoNotOptimize(theta_completed(is, {0, 2}, 1e-10));
}
BENCHMARK(BM_theta_completed)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
