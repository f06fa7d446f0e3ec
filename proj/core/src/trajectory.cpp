#include "dnls/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dnls/error.hpp"

namespace dnls {

double bump_cutoff(double t) {
  const double a = std::abs(t);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double y = a - 1.0;
  return std::exp(1.0 - 1.0 / (1.0 - y * y));
}

double CutoffProfile::support() const {
  return kind == Kind::kNone ? std::numeric_limits<double>::infinity() : 2.0 * scale;
}

Trajectory::Trajectory(double half_width, std::vector<SpectralField> samples, CutoffProfile profile)
    : half_width_(half_width), samples_(std::move(samples)), profile_(profile) {
  require(half_width > 0.0, "trajectory window must be positive");
  require(samples_.size() >= 2, "trajectory needs at least two samples");
  const int n = samples_.front().cutoff();
  for (const auto& s : samples_) require(s.cutoff() == n, "trajectory samples must share one cutoff");
  require(profile_.kind == CutoffProfile::Kind::kNone || profile_.scale > 0.0,
          "cutoff profile scale must be positive");
}

Trajectory Trajectory::sample(double half_width, int steps,
                              const std::function<SpectralField(double)>& f, CutoffProfile profile) {
  require(steps >= 1, "trajectory needs at least one time step");
  std::vector<SpectralField> samples;
  samples.reserve(steps + 1);
  const double dt = 2.0 * half_width / steps;
  for (int k = 0; k <= steps; ++k) samples.push_back(f(-half_width + k * dt));
  return Trajectory(half_width, std::move(samples), profile);
}

Trajectory Trajectory::zeros(int cutoff, double half_width, int steps) {
  return sample(half_width, steps, [cutoff](double) { return SpectralField(cutoff); });
}

int Trajectory::center_index() const {
  require(steps() % 2 == 0, "trajectory grid has no sample at t = 0 (odd step count)");
  return steps() / 2;
}

Trajectory Trajectory::map(const std::function<SpectralField(const SpectralField&)>& f) const {
  std::vector<SpectralField> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(f(s));
  return Trajectory(half_width_, std::move(out), profile_);
}

Trajectory Trajectory::with_profile(CutoffProfile profile) const {
  return Trajectory(half_width_, samples_, profile);
}

bool Trajectory::is_zero() const {
  return std::all_of(samples_.begin(), samples_.end(), [](const auto& s) { return s.is_zero(); });
}

double sup_l2_distance(const Trajectory& a, const Trajectory& b) {
  require(a.size() == b.size() && std::abs(a.half_width() - b.half_width()) < 1e-14,
          "trajectories live on different time grids");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, l2_distance(a[static_cast<int>(k)], b[static_cast<int>(k)]));
  return worst;
}

}  // namespace dnls
