#pragma once

#include <cstdint>
#include <random>

#include "dnls/spectral_field.hpp"
#include "dnls/trajectory.hpp"

namespace dnls {

// Seeded generator with a portable normal sampler, so that draws do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();                     // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  long long integer(long long lo, long long hi);  // inclusive
  double normal();
  Complex complex_normal();  // E|z|^2 = 1

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct RandomFieldOptions {
  enum class Tilt { kBessel, kGaussian };
  Tilt tilt = Tilt::kBessel;  // <xi>^{-decay} or exp(-(xi/width)^2)
  double decay = 1.0;
  double width = 4.0;
  int active = -1;      // only |xi| <= active are drawn; -1 means the full band
  double l2 = -1.0;     // normalize to this L2 norm when positive
};

SpectralField random_field(int cutoff, Rng& rng, const RandomFieldOptions& opt = {});

// chi(t / (support / 2)) (a(xi) e^{-i xi^2 t} + b(xi) e^{-i (xi^2 + w(xi)) t}),
// a, b random fields, w uniform in [-4, 4]; vanishes for |t| >= support.
Trajectory random_trajectory(int cutoff, double half_width, int steps, double support, Rng& rng,
                             const RandomFieldOptions& opt = {});

}  // namespace dnls
