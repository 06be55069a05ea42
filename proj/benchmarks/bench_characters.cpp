#include "hmf/decompose.hpp"
#include "hmf/freudenthal.hpp"

#include <benchmark/benchmark.h>

using namespace hmf;

namespace {

Weight sum_of_fundamentals(const RootDatum& d, int k) {
  Weight w = d.zero();
  for (const auto& f : d.fundamental_weights()) w = add(w, mul(k, f));
  return w;
}

void BM_FreudenthalDominantE6(benchmark::State& state) {
  const RootDatum d = RootDatum::e6();
  const Weight w = mul(static_cast<int>(state.range(0)), d.fundamental_weights()[3]);
  for (auto _ : state) benchmark::DoNotOptimize(freudenthal_dominant(d, w, 10'000'000).dimension);
}
BENCHMARK(BM_FreudenthalDominantE6)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_FreudenthalFullTypeC(benchmark::State& state) {
  const RootDatum d = RootDatum::type_c(static_cast<int>(state.range(0)));
  const Weight w = sum_of_fundamentals(d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(freudenthal_character(d, w, 10'000'000).total());
}
BENCHMARK(BM_FreudenthalFullTypeC)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_DecomposeTensorSquareGL(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RootDatum d = RootDatum::gl(n);
  const FormalCharacter ch = freudenthal_character(d, mul(2, d.fundamental_weights()[0]));
  // character of S^2 plus a second copy, decomposed back into irreducibles
  FormalCharacter doubled(d.dim());
  for (const auto& [mu, m] : ch.terms()) doubled.add(mu, 2 * m);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(d, doubled).size());
}
BENCHMARK(BM_DecomposeTensorSquareGL)->DenseRange(3, 6);

}  // namespace
