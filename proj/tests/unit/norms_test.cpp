#include <gtest/gtest.h>

#include <cmath>

#include "dnls/estimates/ratio_scans.hpp"
#include "dnls/norms.hpp"
#include "dnls/random.hpp"

using namespace dnls;

TEST(Norms, DualExponent) {
  EXPECT_DOUBLE_EQ(dual_exponent(2.0), 2.0);
  EXPECT_DOUBLE_EQ(dual_exponent(4.0 / 3.0), 4.0);
  EXPECT_EQ(dual_exponent(1.0), kInfinity);
  EXPECT_EQ(dual_exponent(kInfinity), 1.0);
}

TEST(Norms, LqNorm) {
  const std::vector<double> v{3.0, 4.0};
  EXPECT_DOUBLE_EQ(lq_norm(v, 2.0), 5.0);
  EXPECT_DOUBLE_EQ(lq_norm(v, 1.0), 7.0);
  EXPECT_DOUBLE_EQ(lq_norm(v, kInfinity), 4.0);
}

TEST(Norms, PlaneWaveSpatialNorm) {
  const auto f = SpectralField::plane_wave(8, 2.0, 3);
  for (double r : {1.5, 2.0, 4.0})
    EXPECT_NEAR(h_norm(f, NormSpec::spatial(0.5, r)), std::pow(10.0, 0.25) * 2.0 * kSqrtTwoPi, 1e-12);
  EXPECT_NEAR(h_norm(f, NormSpec::spatial(0.0, 2.0)), f.l2_norm(), 1e-13);
}

TEST(Norms, SpatialNormIsMonotoneInS) {
  Rng rng(2);
  const auto f = random_field(8, rng);
  EXPECT_LT(h_norm(f, NormSpec::spatial(0.0, 1.5)), h_norm(f, NormSpec::spatial(0.5, 1.5)));
}

TEST(Norms, InvalidSpecRejected) {
  EXPECT_THROW(NormSpec::spatial(0.0, 1.0).validate(), std::exception);
  EXPECT_THROW(NormSpec::spacetime(0.0, 0.5, 2.0, 0.5).validate(), std::exception);
}

TEST(Norms, FreeWaveMatchesClosedForm) {
  const auto check = estimates::quintilinear_plane_wave_check(2, 0.45);
  EXPECT_NEAR(check.lhs / check.lhs_closed, 1.0, 1e-4);
  EXPECT_NEAR(check.rhs / check.rhs_closed, 1.0, 1e-4);
}

TEST(Norms, EmbeddingBound) {
  Rng rng(4);
  std::vector<Trajectory> samples;
  for (int i = 0; i < 4; ++i)
    samples.push_back(random_trajectory(4, 1.0, 128, 1.0, rng).with_profile(CutoffProfile::none()));
  const auto rep = embedding_scan(samples, 0.0, 2.0, 0.6, 0.0);
  for (double v : rep.column("ratio")) EXPECT_LE(v, embedding_constant(0.6, 0.0) * 1.01);
}

TEST(Norms, ZNormDominatesItsParts) {
  Rng rng(8);
  const auto u = random_trajectory(4, 1.0, 96, 1.0, rng);
  const double z = z_norm(u, 0.3, 2.0);
  EXPECT_GE(z, xst_norm(u, NormSpec::spacetime(0.3, 0.5, 2.0, 2.0)) * (1 - 1e-12));
  EXPECT_GE(z, xst_norm(u, NormSpec::spacetime(0.3, 0.0, 2.0, kInfinity)) * (1 - 1e-12));
}
