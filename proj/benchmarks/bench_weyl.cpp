#include "hmf/restricted_weyl.hpp"

#include <benchmark/benchmark.h>

using namespace hmf;

namespace {

void BM_GenerateWeyl(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_weyl(r).size());
}
BENCHMARK(BM_GenerateWeyl)->DenseRange(1, 7)->Unit(benchmark::kMicrosecond);

void BM_GenericOrbit(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  Nu nu;
  for (int i = 0; i < r; ++i) nu.push_back({Rational(2 * i + 1, 2), -1});
  for (auto _ : state) benchmark::DoNotOptimize(orbit(r, {std::nullopt, nu}).size());
}
BENCHMARK(BM_GenericOrbit)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

}  // namespace
