#pragma once

#include <functional>
#include <vector>

#include "dnls/spectral_field.hpp"

namespace dnls {

// Smooth bump: 1 on |t| <= 1, exp(1 - 1/(1 - (|t|-1)^2)) on 1 < |t| < 2, 0 beyond.
double bump_cutoff(double t);

// Time cutoff applied to a trajectory before space-time transforms:
// chi(t / scale) with chi = bump_cutoff, or nothing.
struct CutoffProfile {
  enum class Kind { kNone, kBump };
  Kind kind = Kind::kNone;
  double scale = 1.0;

  static CutoffProfile none() { return {}; }
  static CutoffProfile bump(double scale = 1.0) { return {Kind::kBump, scale}; }

  double operator()(double t) const {
    return kind == Kind::kNone ? 1.0 : bump_cutoff(t / scale);
  }
  // Half-width of the support (infinite for kNone).
  double support() const;
};

// Samples u(t_k) at t_k = -T_w + k dt, k = 0..M, with M dt = 2 T_w.
class Trajectory {
 public:
  Trajectory() = default;
  Trajectory(double half_width, std::vector<SpectralField> samples,
             CutoffProfile profile = CutoffProfile::none());

  // Samples f(t_k) on the uniform grid over [-half_width, half_width].
  static Trajectory sample(double half_width, int steps, const std::function<SpectralField(double)>& f,
                           CutoffProfile profile = CutoffProfile::none());
  static Trajectory zeros(int cutoff, double half_width, int steps);

  double half_width() const { return half_width_; }
  int steps() const { return static_cast<int>(samples_.size()) - 1; }
  double dt() const { return 2.0 * half_width_ / steps(); }
  double time(int k) const { return -half_width_ + k * dt(); }
  int cutoff() const { return samples_.empty() ? 0 : samples_.front().cutoff(); }
  const CutoffProfile& profile() const { return profile_; }

  const SpectralField& operator[](int k) const { return samples_[k]; }
  SpectralField& operator[](int k) { return samples_[k]; }
  const std::vector<SpectralField>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }

  // Index of the sample at t = 0; throws if no grid point sits at zero.
  int center_index() const;

  // Applies f to every sample; the result shares grid and profile.
  Trajectory map(const std::function<SpectralField(const SpectralField&)>& f) const;
  // Same trajectory with a different cutoff profile.
  Trajectory with_profile(CutoffProfile profile) const;

  bool is_zero() const;

 private:
  double half_width_ = 1.0;
  std::vector<SpectralField> samples_;
  CutoffProfile profile_;
};

// sup_k ||a(t_k) - b(t_k)||_{L2}; grids must match.
double sup_l2_distance(const Trajectory& a, const Trajectory& b);

}  // namespace dnls
