#pragma once

#include <cstdint>
#include <functional>

#include "dnls/scan_report.hpp"
#include "dnls/trajectory.hpp"

namespace dnls::estimates {

// Candidates come in three stages: random trajectories (see random_trajectory),
// random single-mode trajectories chi(2t/T) e^{i xi x}(e^{-i xi^2 t} + b e^{-i(xi^2+w)t}),
// and a compass search started from the best of a fixed pool of 64 further
// single-mode candidates (independent of the sample count). All are
// supported in |t| <= support on a grid resolving the largest output modulation.
struct RatioScanOptions {
  int samples = 100;
  int cutoff = 8;
  std::uint64_t seed = 1;
  double support = 1.0;
  int steps = 0;                  // 0 picks the step from the modulation bound
  double decay = 1.0;             // random coefficients ~ <xi>^{-decay}
  int refine = 4;                 // compass-search starts
  int refine_budget = 600;        // ratio evaluations per start
  bool inject_counterexample = false;
};

// ||T(u1,u2,u3)||_{X^{1/2,-1/2}_{r,2}} / (||u1|| ||u2||_{X^{1/2,1/2}_{q,2}} ||u3||_{X^{1/2,1/2}_{r,2}})
ScanReport trilinear_ratio_scan(double q, double r, const RatioScanOptions& opt = {});

// ||u1 u2 conj(u3)||_{L^2_{xt}} / (||u1|| ||u2||_{X^{s,b}} ||u3||_{X^{0,b}})
ScanReport strichartz_ratio_scan(double s, double b, const RatioScanOptions& opt = {});

// ||u1 conj(u2) u3 conj(u4) u5||_{X^{1/2,-b}_{r,2}} over
// sum_k ||u_k||_{X^{1/2,b}_{r,2}} prod_{i != k} ||u_i||_{X^{1/2,b}_{q,2}}
ScanReport quintilinear_ratio_scan(double q, double r, double b, const RatioScanOptions& opt = {});

// Free-wave triples with one high frequency, placed in slot 1 or slot 3.
struct SlotComparison {
  double lhs_slot1 = 0.0, rhs_slot1 = 0.0;
  double lhs_slot3 = 0.0, rhs_slot3 = 0.0;
};
SlotComparison strichartz_slot_comparison(double s, double b, int low, int high, double support = 1.0);

// (int <sigma>^{2b} |F_t(chi^power)(sigma)|^2 dsigma)^{1/2} for chi(2t/support),
// by direct quadrature of the time integral.
double free_wave_constant(double b, int power, double support = 1.0);

// Both sides for five copies of chi(2t/support) e^{i n x - i n^2 t}, from the
// discrete norms and from free_wave_constant.
struct PlaneWaveCheck {
  double lhs = 0.0, lhs_closed = 0.0;
  double rhs = 0.0, rhs_closed = 0.0;
};
PlaneWaveCheck quintilinear_plane_wave_check(int n, double b, double support = 1.0, int steps = 800);

// The counterexample family of the trilinear endpoint as trajectories at cutoff N.
struct CounterexampleTriple {
  Trajectory u1, u2, u3;
};
CounterexampleTriple counterexample_trajectories(int cutoff, double support, int steps);

// Uniform step count on [-support, support] resolving modulations up to omega.
int steps_for_modulation(double omega, double support);

}  // namespace dnls::estimates
