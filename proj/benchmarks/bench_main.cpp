#include <benchmark/benchmark.h>

#include <random>

#include "so32/alp.hpp"
#include "so32/generators.hpp"
#include "so32/quadrature.hpp"
#include "so32/sphere.hpp"

namespace {

void BM_EvalT(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(so32::eval_T(l, l / 2, x));
    x = x > 0.9 ? -0.9 : x + 1e-3;
  }
}
BENCHMARK(BM_EvalT)->RangeMultiplier(4)->Range(4, 1024);

void BM_EvalTColumn(benchmark::State& state) {
  const int l_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(so32::eval_T_column(1, l_max, 0.42));
  state.SetComplexityN(l_max);
}
BENCHMARK(BM_EvalTColumn)->RangeMultiplier(4)->Range(4, 1024)->Complexity(benchmark::oN);

void BM_GaussLegendre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(so32::gauss_legendre(n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_GaussLegendre)->RangeMultiplier(2)->Range(8, 512)->Complexity(benchmark::oNSquared);

void BM_So32Casimir(benchmark::State& state) {
  const so32::Truncation t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(so32::casimir(so32::CasimirKind::so32, t));
}
BENCHMARK(BM_So32Casimir)->DenseRange(8, 32, 8)->Unit(benchmark::kMillisecond);

void BM_ShtRoundTrip(benchmark::State& state) {
  const int l_max = static_cast<int>(state.range(0));
  const so32::SphereGrid grid = so32::SphereGrid::gauss(l_max + 1, 2 * l_max + 1);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  so32::ComplexCoeffs c{so32::Truncation(l_max)};
  for (so32::ModeIndex mode : so32::lattice(so32::Truncation(l_max))) c.set(mode, {u(rng), u(rng)});
  for (auto _ : state) benchmark::DoNotOptimize(so32::sht_analyze(so32::sht_synthesize(c, grid), l_max));
}
BENCHMARK(BM_ShtRoundTrip)->DenseRange(8, 32, 8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
