#include <gtest/gtest.h>

#include <cmath>

#include "dnls/fft.hpp"
#include "dnls/random.hpp"
#include "dnls/spectral_field.hpp"
#include "dnls_checks/oracles.hpp"

using namespace dnls;

namespace {

SpectralField sample_field(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_field(n, rng);
}

}  // namespace

TEST(Fft, MatchesDirectSum) {
  Rng rng(3);
  std::vector<Complex> x(15);
  for (auto& v : x) v = rng.complex_normal();
  const auto X = fft::forward(x);
  for (std::size_t k = 0; k < x.size(); ++k) {
    Complex s{};
    for (std::size_t j = 0; j < x.size(); ++j)
      s += x[j] * std::polar(1.0, -kTwoPi * static_cast<double>(j * k) / static_cast<double>(x.size()));
    EXPECT_NEAR(std::abs(X[k] - s), 0.0, 1e-12);
  }
  const auto back = fft::backward(X);
  for (std::size_t j = 0; j < x.size(); ++j) EXPECT_NEAR(std::abs(back[j] / 15.0 - x[j]), 0.0, 1e-13);
}

TEST(Fft, GoodSizeIsSmooth) {
  for (int n : {1, 7, 13, 97, 1000, 1031}) {
    int m = fft::good_size(n);
    EXPECT_GE(m, n);
    for (int p : {2, 3, 5})
      while (m % p == 0) m /= p;
    EXPECT_EQ(m, 1) << n;
  }
  EXPECT_EQ(fft::good_size(97), 100);
}

TEST(SpectralField, PlaneWaveCoefficient) {
  const auto f = SpectralField::plane_wave(4, Complex(2.0, -1.0), 3);
  EXPECT_EQ(f.cutoff(), 4);
  EXPECT_EQ(f.size(), 9u);
  EXPECT_NEAR(std::abs(f[3] - kSqrtTwoPi * Complex(2.0, -1.0)), 0.0, 1e-15);
  EXPECT_EQ(f[2], Complex{});
  EXPECT_EQ(f[17], Complex{});
  EXPECT_NEAR(f.l2_norm(), kSqrtTwoPi * std::sqrt(5.0), 1e-14);
  EXPECT_NEAR(std::abs(mean_value(SpectralField::plane_wave(4, 1.5, 0)) - 1.5), 0.0, 1e-15);
}

TEST(SpectralField, AtThrowsOutsideBand) {
  SpectralField f(2);
  EXPECT_NO_THROW(f.at(-2));
  EXPECT_THROW(f.at(3), std::exception);
}

TEST(SpectralField, PhysicalSamplesAgreeWithSeries) {
  const auto f = sample_field(6, 11);
  for (int g : {13, 16, 27}) {
    const auto fast = to_physical(f, g);
    const auto direct = checks::direct_samples(f, g);
    for (int j = 0; j < g; ++j) EXPECT_NEAR(std::abs(fast[j] - direct[j]), 0.0, 1e-13);
    const auto back = from_physical(fast, 6);
    EXPECT_LT(l2_distance(back, f), 1e-13);
    EXPECT_LT(l2_distance(checks::direct_coefficients(direct, 6), f), 1e-13);
  }
}

TEST(SpectralField, DerivativeAndConjugate) {
  const auto f = sample_field(5, 2);
  const auto d = derivative(f);
  for (int xi = -5; xi <= 5; ++xi) EXPECT_EQ(d[xi], Complex(0.0, xi) * f[xi]);
  const auto c = f.conj();
  for (int xi = -5; xi <= 5; ++xi) EXPECT_EQ(c[xi], std::conj(f[-xi]));
  const auto r = f.reflected();
  for (int xi = -5; xi <= 5; ++xi) EXPECT_EQ(r[xi], f[-xi]);
}

TEST(SpectralField, ResizeAndDistance) {
  const auto f = sample_field(6, 4);
  const auto big = f.resized(10);
  EXPECT_EQ(big.cutoff(), 10);
  EXPECT_EQ(l2_distance(big, f), 0.0);
  const auto small = f.resized(3);
  EXPECT_NEAR(l2_distance(small, f), f.tail_l2(3), 1e-15);
  EXPECT_NEAR(f.l2_norm() * f.l2_norm(), small.l2_norm() * small.l2_norm() + f.tail_l2(3) * f.tail_l2(3), 1e-13);
}

TEST(SpectralField, Arithmetic) {
  const auto f = sample_field(4, 5), g = sample_field(4, 6);
  const auto h = f + 2.0 * g - f;
  for (int xi = -4; xi <= 4; ++xi) EXPECT_NEAR(std::abs(h[xi] - 2.0 * g[xi]), 0.0, 1e-15);
  EXPECT_TRUE((f - f).is_zero());
}
