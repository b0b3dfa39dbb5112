#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "deviant/iir.hpp"
#include "deviant/lkts.hpp"
#include "deviant/view_curve.hpp"
#include "deviant/view_gaussian.hpp"
#include "deviant/view_linear.hpp"

namespace {

deviant::Series noisy_wave(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::vector<double> y(n);
  for (std::size_t x = 0; x < n; ++x)
    y[x] = std::sin(2 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(n)) +
           noise(rng);
  return deviant::Series(y);
}

void BM_Iir(benchmark::State& state) {
  const auto s = noisy_wave(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deviant::iir_profile(s.values()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Iir)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oNLogN);

void BM_Gaussian(benchmark::State& state) {
  const auto s = noisy_wave(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deviant::gaussian_rdd(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gaussian)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_Linear(benchmark::State& state) {
  const auto s = noisy_wave(static_cast<std::size_t>(state.range(0)));
  const deviant::ExecutionPolicy policy{static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(deviant::linear_rdd(s, {}, policy));
}
BENCHMARK(BM_Linear)
    ->ArgsProduct({{25, 50, 100, 200}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_Curve(benchmark::State& state) {
  const auto s = noisy_wave(static_cast<std::size_t>(state.range(0)));
  const deviant::ExecutionPolicy policy{static_cast<std::size_t>(state.range(1))};
  for (auto _ : state)
    benchmark::DoNotOptimize(deviant::curve_rdd(s, {deviant::SignFilter::Plus, 2}, {}, policy));
}
BENCHMARK(BM_Curve)
    ->ArgsProduct({{25, 50, 100, 200}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_LktsThrough(benchmark::State& state) {
  const auto s = noisy_wave(static_cast<std::size_t>(state.range(0)));
  const int turns = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(deviant::lkts_through(s, s.size() / 2, turns));
}
BENCHMARK(BM_LktsThrough)->ArgsProduct({{100, 400, 1600}, {0, 2, 8}});

}  // namespace

BENCHMARK_MAIN();
