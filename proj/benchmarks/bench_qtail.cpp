// Microbenchmarks for the evaluator routes and the root finders. The two
// production representations should sit within an order of magnitude of each
// other; the quadrature oracle is expected to be ~100x slower — it exists for
// cross-checking, not for serving values.

#include <benchmark/benchmark.h>

#include <cmath>

#include "qtail/bounds.hpp"
#include "qtail/gauss.hpp"
#include "qtail/inverse.hpp"

namespace {

void BM_MillsRatioSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qtail::mills_ratio(1.0));
}
BENCHMARK(BM_MillsRatioSeries);

void BM_MillsRatioContinuedFraction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qtail::mills_ratio(8.0));
}
BENCHMARK(BM_MillsRatioContinuedFraction);

void BM_MillsRatioQuadrature(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(qtail::mills_ratio_quadrature(x));
}
BENCHMARK(BM_MillsRatioQuadrature)->Arg(1)->Arg(8)->Arg(30);

void BM_BoundLogValue(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qtail::bound_log_value(qtail::BoundId::thm3_lower, 3.0));
}
BENCHMARK(BM_BoundLogValue);

void BM_CompareAllBounds(benchmark::State& state) {
  std::vector<qtail::BoundId> ids;
  for (const auto& spec : qtail::bound_catalog()) ids.push_back(spec.id);
  for (auto _ : state)
    benchmark::DoNotOptimize(qtail::compare_at(3.0, ids));
}
BENCHMARK(BM_CompareAllBounds);

void BM_InverseQ(benchmark::State& state) {
  const double alpha = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qtail::inverse_q(alpha));
}
BENCHMARK(BM_InverseQ)->Arg(-3)->Arg(-10)->Arg(-100);

void BM_InvertBound(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qtail::invert_bound(qtail::BoundId::thm3_lower, 1e-6));
}
BENCHMARK(BM_InvertBound);

void BM_EstimateLow1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qtail::estimate_low1(1e-6));
}
BENCHMARK(BM_EstimateLow1);

}  // namespace

BENCHMARK_MAIN();
