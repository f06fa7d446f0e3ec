#include <benchmark/benchmark.h>

#include "dnls/nonlinearity.hpp"
#include "dnls/random.hpp"

using namespace dnls;
using namespace dnls::nonlinear;

namespace {

SpectralField field(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_field(n, rng);
}

void BM_TFast(benchmark::State& state) {
  const auto v = field(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(t_full(v, v, v));
}
BENCHMARK(BM_TFast)->RangeMultiplier(2)->Range(8, 128);

void BM_TStarBrute(benchmark::State& state) {
  const auto v = field(static_cast<int>(state.range(0)), 1);
  const auto mask = FrequencyMask::trilinear();
  for (auto _ : state) benchmark::DoNotOptimize(brute_trilinear(v, v, v, true, mask));
}
BENCHMARK(BM_TStarBrute)->RangeMultiplier(2)->Range(4, 16);

void BM_QFast(benchmark::State& state) {
  const auto v = field(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(q_op(v, v, v, v, v));
}
BENCHMARK(BM_QFast)->RangeMultiplier(2)->Range(4, 64);

void BM_QBrute(benchmark::State& state) {
  const auto v = field(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(q_op(v, v, v, v, v, Band::kInput, QPath::kBrute));
}
BENCHMARK(BM_QBrute)->DenseRange(2, 4, 1);

void BM_DnlsNonlinearity(benchmark::State& state) {
  const auto v = field(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(dnls_nonlinearity(v));
}
BENCHMARK(BM_DnlsNonlinearity)->RangeMultiplier(4)->Range(8, 512);

}  // namespace
