#include <benchmark/benchmark.h>

#include "hhl/bar.hpp"
#include "hhl/complexes.hpp"
#include "hhl/hecke.hpp"
#include "hhl/homology.hpp"
#include "hhl/linalg.hpp"

using namespace hhl;

namespace {

void BM_HeckeMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto ctx = HeckeContext::make(n, ScalarConfig::parse("2", "Q"));
  const auto x = xi_elem(ctx, 1, 0, n - 2);
  const auto y = v_elem(ctx, MVector::all_up_to(n).back());
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}
BENCHMARK(BM_HeckeMul)->DenseRange(3, 6);

void BM_BuildDpm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = ScalarConfig::parse("1/3", "Q");
  for (auto _ : state) benchmark::DoNotOptimize(build_D(n, CoxeterType::B, s, false));
}
BENCHMARK(BM_BuildDpm)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RankTopBoundary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = build_D(n, CoxeterType::B, ScalarConfig::parse("1/3", "Q"), false);
  const auto& d = c.boundary(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
}
BENCHMARK(BM_RankTopBoundary)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_RankPrimeField(benchmark::State& state) {
  const auto c = build_D(4, CoxeterType::B, ScalarConfig::parse("2", "Fp:10007"), false);
  for (auto _ : state) benchmark::DoNotOptimize(rank(c.boundary(3)));
}
BENCHMARK(BM_RankPrimeField)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const auto c = build_C(static_cast<int>(state.range(0)), false, Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(homology_dims(c));
}
BENCHMARK(BM_Homology)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_BarTor(benchmark::State& state) {
  const auto s = ScalarConfig::parse("2", "Q");
  for (auto _ : state) benchmark::DoNotOptimize(bar_tor_dims(CoxeterType::B, 2, 2, s));
}
BENCHMARK(BM_BarTor)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
