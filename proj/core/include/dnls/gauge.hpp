#pragma once

#include <cstdint>
#include <vector>

#include "dnls/scan_report.hpp"
#include "dnls/spectral_field.hpp"
#include "dnls/trajectory.hpp"

namespace dnls::gauge {

// Discretization of the gauge maps. The multiplier exp(-i I u) is not band
// limited, so the gauged field is projected to `gauged_cutoff` (default N);
// the projected-away l2 mass is reported with every result.
struct GaugeContext {
  int cutoff = 0;         // cutoff of fields on the ungauged side
  int gauged_cutoff = 0;  // cutoff of fields on the gauged side
  int gridsize = 0;       // physical grid for products; grown when needed

  static GaugeContext for_cutoff(int cutoff);
  GaugeContext with_gauged_cutoff(int n) const;
  GaugeContext with_gridsize(int g) const;
  void validate() const;
};

struct GaugeOutput {
  SpectralField field;
  double truncated_l2 = 0.0;
};

struct GaugeTrajectory {
  Trajectory trajectory;
  double truncated_l2 = 0.0;  // max over samples
};

// Mean-zero primitive of |u|^2 - mean |u|^2; exact, returned at cutoff 2N.
SpectralField primitive_I(const SpectralField& u);

// exp(-i I u) u, projected to ctx.gauged_cutoff.
GaugeOutput gauge0(const SpectralField& u, const GaugeContext& ctx);
// exp(+i I v) v, projected to ctx.cutoff.
GaugeOutput gauge0_inv(const SpectralField& v, const GaugeContext& ctx);

enum class Shift { kMinus, kPlus };

// u(t, x -+ 2 t m), m the mean of |u(t)|^2: exact multiplication by e^{-+2 i t m xi}.
SpectralField translate(const SpectralField& u, double t, Shift sign);
Trajectory translate(const Trajectory& traj, Shift sign);

// Translation composed with gauge0 per time sample, and its inverse.
SpectralField gauge_field(const SpectralField& u, double t, const GaugeContext& ctx,
                          double* truncated_l2 = nullptr);
SpectralField gauge_field_inv(const SpectralField& v, double t, const GaugeContext& ctx,
                              double* truncated_l2 = nullptr);
GaugeTrajectory gauge_full(const Trajectory& traj, const GaugeContext& ctx);
GaugeTrajectory gauge_full_inv(const Trajectory& traj, const GaugeContext& ctx);

// Pairs u = amplitude n^{-s} e^{inx} + n^{-1/2} and w = amplitude n^{-s} e^{inx}:
// input gap in H^s_r, sup over t in [-1, 1] of the translated gap, and the
// same sup for the full gauge map.
ScanReport uniform_continuity_probe(double amplitude, double s, double r,
                                    const std::vector<int>& n_list, int time_samples = 201);

// Ratio ||Gu(t) - Gw(t)|| / ||u - w|| in H^s_r over random pairs with equal L2 norm.
ScanReport lipschitz_probe(int cutoff, int pairs, double l2, double s, double r,
                           std::uint64_t seed, double horizon = 0.1);

}  // namespace dnls::gauge
