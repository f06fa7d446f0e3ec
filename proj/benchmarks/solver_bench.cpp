#include <benchmark/benchmark.h>

#include "dnls/gauge.hpp"
#include "dnls/norms.hpp"
#include "dnls/random.hpp"
#include "dnls/solver.hpp"

using namespace dnls;

namespace {

solver::SolveConfig config(int n, solver::Equation eq) {
  solver::SolveConfig cfg;
  cfg.cutoff = n;
  cfg.horizon = 0.05;
  cfg.steps = 200;
  cfg.equation = eq;
  return cfg;
}

SpectralField datum(int n) {
  Rng rng(1);
  RandomFieldOptions opt;
  opt.tilt = RandomFieldOptions::Tilt::kGaussian;
  opt.l2 = 0.2;
  return random_field(n, rng, opt);
}

void BM_PicardDnls(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u0 = datum(n);
  const auto cfg = config(n, solver::Equation::kDnls);
  for (auto _ : state) benchmark::DoNotOptimize(solver::picard_solve(u0, cfg));
}
BENCHMARK(BM_PicardDnls)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_PicardGauged(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u0 = datum(n);
  const auto cfg = config(n, solver::Equation::kGauged);
  for (auto _ : state) benchmark::DoNotOptimize(solver::picard_solve(u0, cfg));
}
BENCHMARK(BM_PicardGauged)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Ifrk4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u0 = datum(n);
  const auto cfg = config(n, solver::Equation::kDnls);
  for (auto _ : state) benchmark::DoNotOptimize(solver::ifrk4_solve(u0, cfg));
}
BENCHMARK(BM_Ifrk4)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_GaugeFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const auto u = random_trajectory(n, 0.1, 40, 0.1, rng);
  const auto ctx = gauge::GaugeContext::for_cutoff(n).with_gauged_cutoff(4 * n);
  for (auto _ : state) benchmark::DoNotOptimize(gauge::gauge_full(u, ctx));
}
BENCHMARK(BM_GaugeFull)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_XstNorm(benchmark::State& state) {
  Rng rng(3);
  const auto u = random_trajectory(16, 1.0, static_cast<int>(state.range(0)), 1.0, rng);
  const auto spec = NormSpec::spacetime(0.5, 0.5, 2.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(xst_norm(u, spec));
}
BENCHMARK(BM_XstNorm)->Arg(128)->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);

}  // namespace
