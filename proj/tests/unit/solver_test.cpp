#include <gtest/gtest.h>

#include <cmath>

#include "dnls/random.hpp"
#include "dnls/solver.hpp"
#include "dnls_checks/oracles.hpp"

using namespace dnls;
using namespace dnls::solver;

namespace {

SolveConfig config(Equation eq, int n = 16, double horizon = 0.05, int steps = 100) {
  SolveConfig cfg;
  cfg.cutoff = n;
  cfg.horizon = horizon;
  cfg.steps = steps;
  cfg.equation = eq;
  return cfg;
}

SpectralField small_datum(int n, std::uint64_t seed) {
  Rng rng(seed);
  RandomFieldOptions opt;
  opt.tilt = RandomFieldOptions::Tilt::kGaussian;
  opt.l2 = 0.2;
  return random_field(n, rng, opt);
}

}  // namespace

TEST(Solver, EquationNames) {
  for (auto eq : {Equation::kDnls, Equation::kGauged, Equation::kNlsStar, Equation::kLinear})
    EXPECT_EQ(equation_from_string(to_string(eq)), eq);
  EXPECT_THROW(equation_from_string("kdv"), std::exception);
}

TEST(Solver, ConfigValidation) {
  auto cfg = config(Equation::kDnls);
  cfg.steps = 7;
  EXPECT_THROW(cfg.validate(), std::exception);
  cfg = config(Equation::kDnls);
  cfg.horizon = -1.0;
  EXPECT_THROW(cfg.validate(), std::exception);
}

TEST(Solver, FreeEvolutionIsAPhase) {
  const auto u = small_datum(6, 1);
  const auto v = free_evolution(u, 0.3);
  for (int xi = -6; xi <= 6; ++xi)
    EXPECT_NEAR(std::abs(v[xi] - std::polar(1.0, -0.3 * xi * xi) * u[xi]), 0.0, 1e-15);
}

TEST(Solver, DuhamelOfConstantForcing) {
  // constant forcing at frequency 0 integrates to -i t F exactly
  const auto f = SpectralField::plane_wave(2, 1.0, 0);
  const auto forcing = Trajectory::sample(0.2, 10, [&](double) { return f; });
  const auto d = duhamel(forcing);
  for (int k = 0; k <= 10; ++k) EXPECT_LT(l2_distance(d[k], Complex(0.0, -forcing.time(k)) * f), 1e-14);
  // odd cell counts use the 3/8 closure
  const auto odd = Trajectory::sample(0.2, 10, [&](double t) { return (t * t) * f; });
  const auto e = duhamel(odd, 10);
  EXPECT_NEAR(std::abs(e[0] - Complex(0.0, -0.008 / 3.0) * f[0]), 0.0, 1e-14);
}

TEST(Solver, LinearFlowIsExact) {
  const auto u0 = small_datum(8, 2);
  const auto rep = picard_solve(u0, config(Equation::kLinear, 8));
  ASSERT_TRUE(rep.converged);
  for (int k = 0; k <= rep.trajectory.steps(); ++k)
    EXPECT_LT(l2_distance(rep.trajectory[k], free_evolution(u0, rep.trajectory.time(k))), 1e-14);
}

TEST(Solver, PlaneWaveDnls) {
  const auto cfg = config(Equation::kDnls, 16, 0.1, 200);
  const auto rep = picard_solve(SpectralField::plane_wave(16, std::sqrt(2.0), 1), cfg);
  ASSERT_TRUE(rep.converged);
  for (int k = 0; k <= rep.trajectory.steps(); k += 20)
    EXPECT_LT(l2_distance(rep.trajectory[k],
                          checks::plane_wave_solution(16, std::sqrt(2.0), 1, rep.trajectory.time(k))),
              1e-9);
  EXPECT_LT(rep.max_mass_drift, 10 * cfg.tolerance);
  EXPECT_LT(rep.integral_residual, 1e-9);
}

TEST(Solver, PlaneWaveNlsStar) {
  // (|u|^2 - 2 mean |u|^2) u = -|A|^2 u, so theta = |A|^2 - n^2
  const double a = 0.8;
  const auto rep = picard_solve(SpectralField::plane_wave(8, a, 2), config(Equation::kNlsStar, 8));
  ASSERT_TRUE(rep.converged);
  const int last = rep.trajectory.steps();
  const double t = rep.trajectory.time(last);
  const auto exact = SpectralField::plane_wave(8, std::polar(a, (a * a - 4.0) * t), 2);
  EXPECT_LT(l2_distance(rep.trajectory[last], exact), 1e-9);
}

TEST(Solver, PicardAgreesWithRk4) {
  auto cfg = config(Equation::kDnls);
  cfg.cross_check = true;
  const auto rep = picard_solve(small_datum(16, 3), cfg);
  ASSERT_TRUE(rep.converged);
  ASSERT_TRUE(rep.cross_check_residual.has_value());
  EXPECT_LT(*rep.cross_check_residual, 1e-7);
  EXPECT_LT(sup_l2_distance(ifrk4_solve(small_datum(16, 3), cfg), rep.trajectory), 1e-7);
}

TEST(Solver, GaugedRouteAgreesWithDirect) {
  const auto cfg = config(Equation::kDnls);
  const auto u0 = small_datum(16, 4);
  const auto direct = picard_solve(u0, cfg);
  const auto via = solve_dnls_via_gauge(u0, cfg);
  ASSERT_TRUE(direct.converged && via.converged);
  EXPECT_LT(sup_l2_distance(direct.trajectory, via.trajectory), 1e-6);
}

TEST(Solver, ReportsNonConvergence) {
  auto cfg = config(Equation::kDnls, 8, 1.0, 100);
  cfg.max_iterations = 10;
  const auto rep = picard_solve(SpectralField::plane_wave(8, 3.0, 3), cfg);
  EXPECT_FALSE(rep.converged);
  EXPECT_NE(to_json(rep).find("FAILED"), std::string::npos);
}
