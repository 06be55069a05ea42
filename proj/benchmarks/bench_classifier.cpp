#include "hmf/classifier.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace hmf;

namespace {

const char* const kPairs[] = {"A:r=2,b=2", "C:3", "D:5", "BD:8", "E6", "E7"};

void BM_ClassifyRange(benchmark::State& state) {
  const HermitianPair p = HermitianPair::parse(kPairs[state.range(0)]);
  const int bound = p.family == Family::E6 || p.family == Family::E7 ? 2 : 4;
  ClassifierOptions options;
  options.dimension_cap = 2'000'000;
  options.jobs = static_cast<int>(state.range(1));
  state.SetLabel(kPairs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(classify_range(p, bound, options).total);
}
BENCHMARK(BM_ClassifyRange)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_MfCheckE7(benchmark::State& state) {
  const HermitianPair p = HermitianPair::e7();
  const KRepresentation tau{concat(RootDatum::e6().fundamental_weights()[0], Weight{0})};
  for (auto _ : state) benchmark::DoNotOptimize(mf_check(p, tau).multiplicity_free);
}
BENCHMARK(BM_MfCheckE7)->Unit(benchmark::kMicrosecond);

}  // namespace
