#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "srlw/illposedness.hpp"
#include "srlw/initial_data.hpp"
#include "srlw/solver.hpp"

using namespace srlw;

namespace {

StatePair gaussian_state(std::size_t m) {
  return sample_state(make_grid(20.0, m), gaussian(), gaussian_derivative());
}

void BM_ForwardTransform(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const SpectralGrid grid = make_grid(20.0, m);
  std::vector<double> f(m);
  for (std::size_t j = 0; j < m; ++j) f[j] = std::exp(-grid.node(j) * grid.node(j));
  for (auto _ : state) benchmark::DoNotOptimize(forward_transform(grid, f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardTransform)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_NonlinearTerm(benchmark::State& state) {
  const StatePair s = gaussian_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nonlinear_term(s));
}
BENCHMARK(BM_NonlinearTerm)->RangeMultiplier(4)->Range(64, 4096);

void BM_Step(benchmark::State& state) {
  StatePair s = gaussian_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) s = step(s, 1e-3);
}
BENCHMARK(BM_Step)->RangeMultiplier(4)->Range(64, 4096);

void BM_JClosed(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xi(-10.0, 10.0), t(0.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(j_closed(xi(rng), xi(rng), t(rng)));
}
BENCHMARK(BM_JClosed);

void BM_SecondIterateNorm(benchmark::State& state) {
  const auto datum = build_counterexample(static_cast<double>(state.range(0)), Flavor::line);
  for (auto _ : state) benchmark::DoNotOptimize(second_iterate_norm(datum, 0.5, SobolevIndex(-0.5)));
}
BENCHMARK(BM_SecondIterateNorm)->Arg(32)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
