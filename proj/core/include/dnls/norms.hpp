#pragma once

#include <limits>
#include <vector>

#include "dnls/scan_report.hpp"
#include "dnls/spectral_field.hpp"
#include "dnls/trajectory.hpp"

namespace dnls {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Exponents for the weighted spaces. r lives in (1, inf), p in [1, inf].
// Norms are taken in l^{r'} over frequencies and L^{p'} over modulations.
struct NormSpec {
  double s = 0.0;
  double b = 0.0;
  double r = 2.0;
  double p = 2.0;

  static NormSpec spatial(double s, double r);
  static NormSpec spacetime(double s, double b, double r, double p);

  double r_dual() const;
  double p_dual() const;
  void validate() const;
};

// Holder conjugate, with 1 <-> inf.
double dual_exponent(double q);

// (sum_k w_k^q)^{1/q}, or max for q = inf.
double lq_norm(const std::vector<double>& values, double q);

// || <xi>^s u^ ||_{l^{r'}}
double h_norm(const SpectralField& f, const NormSpec& spec);

struct XstOptions {
  int pad = 4;  // zero padding factor of the temporal DFT
};

// Discrete X^{s,b}_{r,p} norm. For each xi the samples are multiplied by the
// cutoff profile and e^{i xi^2 t}, so the temporal DFT is taken directly in
// the modulation sigma = tau + xi^2. Trapezoid weights in t, Riemann sum in
// sigma over the padded DFT grid. Converges as dt -> 0 and pad -> inf.
double xst_norm(const Trajectory& traj, const NormSpec& spec, const XstOptions& opt = {});

// Modulus of the space-time transform at one frequency, on the sigma grid.
struct ModulationProfile {
  std::vector<double> sigma;
  std::vector<double> modulus;
  double dsigma = 0.0;
};
ModulationProfile modulation_profile(const Trajectory& traj, int xi, const XstOptions& opt = {});

// max(X^{s,1/2}_{r,2}, X^{s,0}_{r,inf})
double z_norm(const Trajectory& traj, double s, double r, const XstOptions& opt = {});

// (int <sigma>^{2(b2-b1)} dsigma)^{1/2}, the constant in X^{s,b1}_{r,2} -> X^{s,b2}_{r,inf}.
double embedding_constant(double b1, double b2);

// Ratio ||u||_{X^{s,b2}_{r,inf}} / ||u||_{X^{s,b1}_{r,2}} per sample.
// Zero trajectories are skipped.  Requires b1 > b2 + 1/2.
ScanReport embedding_scan(const std::vector<Trajectory>& samples, double s, double r, double b1,
                          double b2, const XstOptions& opt = {});

}  // namespace dnls
