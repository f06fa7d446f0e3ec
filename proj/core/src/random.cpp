#include "dnls/random.hpp"

#include <cmath>
#include <vector>

#include "dnls/error.hpp"

namespace dnls {

double Rng::uniform() {
  // 53 random bits
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

long long Rng::integer(long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + static_cast<long long>(x % span);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  while (u == 0.0) u = uniform();
  const double v = uniform();
  const double rad = std::sqrt(-2.0 * std::log(u));
  spare_ = rad * std::sin(kTwoPi * v);
  has_spare_ = true;
  return rad * std::cos(kTwoPi * v);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

SpectralField random_field(int cutoff, Rng& rng, const RandomFieldOptions& opt) {
  require(cutoff >= 0, "cutoff must be nonnegative");
  const int active = opt.active < 0 ? cutoff : std::min(opt.active, cutoff);
  std::vector<Complex> c(2 * cutoff + 1);
  for (int xi = -active; xi <= active; ++xi) {
    const double w = opt.tilt == RandomFieldOptions::Tilt::kBessel
                         ? std::pow(bracket(xi), -opt.decay)
                         : std::exp(-(xi / opt.width) * (xi / opt.width));
    c[xi + cutoff] = w * rng.complex_normal();
  }
  SpectralField f(cutoff, std::move(c));
  if (opt.l2 > 0.0) {
    const double n = f.l2_norm();
    if (n > 0.0) f *= opt.l2 / n;
  }
  return f;
}

Trajectory random_trajectory(int cutoff, double half_width, int steps, double support, Rng& rng,
                             const RandomFieldOptions& opt) {
  require(support > 0.0 && support <= half_width * (1.0 + 1e-12),
          "trajectory support must fit in the window");
  const auto a = random_field(cutoff, rng, opt);
  const auto b = random_field(cutoff, rng, opt);
  std::vector<double> w(2 * cutoff + 1);
  for (auto& x : w) x = rng.uniform(-4.0, 4.0);
  return Trajectory::sample(half_width, steps, [&](double t) {
    const double chi = bump_cutoff(2.0 * t / support);
    SpectralField f(cutoff);
    for (int xi = -cutoff; xi <= cutoff; ++xi) {
      const double x2 = static_cast<double>(xi) * xi;
      f.at(xi) = chi * (a[xi] * std::polar(1.0, -x2 * t) +
                        b[xi] * std::polar(1.0, -(x2 + w[xi + cutoff]) * t));
    }
    return f;
  });
}

}  // namespace dnls
