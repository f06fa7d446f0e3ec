#include <benchmark/benchmark.h>

#include "dnls/estimates/counterexample.hpp"
#include "dnls/estimates/divisors.hpp"
#include "dnls/estimates/lattice_sums.hpp"

using namespace dnls::estimates;

namespace {

void BM_DivisorTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(divisor_table(state.range(0)));
}
BENCHMARK(BM_DivisorTable)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_LatticeSup(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_sup(SumVariant::kSum2, 0.5, SumGrid{}, L));
}
BENCHMARK(BM_LatticeSup)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_LatticeSumDirect(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_sum(SumVariant::kSum2, 0.5, 3.5, 2, L));
}
BENCHMARK(BM_LatticeSumDirect)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_CounterexampleSums(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_partial_sums({1000, 10000, 100000, 1000000}));
}
BENCHMARK(BM_CounterexampleSums)->Unit(benchmark::kMillisecond);

}  // namespace
