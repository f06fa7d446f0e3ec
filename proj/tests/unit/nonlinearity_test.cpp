#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "dnls/nonlinearity.hpp"
#include "dnls/random.hpp"
#include "dnls_checks/oracles.hpp"

using namespace dnls;
using namespace dnls::nonlinear;

namespace {

SpectralField integer_field(int n, Rng& rng) {
  SpectralField f(n);
  for (int xi = -n; xi <= n; ++xi)
    f.at(xi) = Complex(static_cast<double>(rng.integer(-5, 5)), static_cast<double>(rng.integer(-5, 5)));
  return f;
}

void expect_identical(const SpectralField& a, const SpectralField& b) {
  ASSERT_EQ(a.cutoff(), b.cutoff());
  for (int xi = -a.cutoff(); xi <= a.cutoff(); ++xi) EXPECT_EQ(a[xi], b[xi]) << "xi=" << xi;
}

}  // namespace

TEST(FrequencyMask, Rules) {
  const auto t = FrequencyMask::trilinear();
  EXPECT_TRUE(t.admits(std::array{3, 1, 1, 1}));
  EXPECT_FALSE(t.admits(std::array{1, 1, 2, -2}));
  EXPECT_FALSE(t.admits(std::array{2, 0, 2, 0}));
  const auto q = FrequencyMask::quintilinear();
  EXPECT_TRUE(q.admits(std::array{1, 1, 1, 1, 1, -3}));
  EXPECT_FALSE(q.admits(std::array{1, 2, -2, 0, 0, 1}));
  EXPECT_FALSE(q.admits(std::array{1, 1, 1, -1, -1, 1}));
  FrequencyMask none;
  EXPECT_TRUE(none.admits(std::array{0, 0, 0, 0}));
  EXPECT_FALSE((t && q).admits(std::array{1, 1, 0, 0, 0, 0}));
}

TEST(Nonlinearity, DnlsMatchesDirectSums) {
  Rng rng(1);
  for (int n : {3, 8}) {
    const auto u = random_field(n, rng);
    EXPECT_LT(l2_distance(dnls_nonlinearity(u), checks::direct_dnls_nonlinearity(u)), 1e-12);
  }
}

TEST(Nonlinearity, MaskedOperatorsExactOnIntegers) {
  Rng rng(2);
  for (int n = 1; n <= 5; ++n) {
    const auto a = integer_field(n, rng), b = integer_field(n, rng), c = integer_field(n, rng);
    expect_identical(t_star(a, b, c, Band::kFull), brute_trilinear(a, b, c, true, FrequencyMask::trilinear()));
    expect_identical(c1_op(a, b, c, Band::kFull), brute_trilinear(a, b, c, false, FrequencyMask::trilinear()));
    expect_identical(t_full(a, b, c, Band::kFull), checks::enumerate_T(a, b, c));
  }
}

TEST(Nonlinearity, TSplitsIntoRestrictedAndDiagonal) {
  Rng rng(3);
  const auto a = random_field(6, rng), b = random_field(6, rng), c = random_field(6, rng);
  EXPECT_LT(l2_distance(t_full(a, b, c), t_star(a, b, c) + t_dstar(a, b, c)), 1e-13);
}

TEST(Nonlinearity, QuinticFastMatchesBrute) {
  Rng rng(4);
  for (int n : {1, 3}) {
    std::vector<SpectralField> u;
    for (int i = 0; i < 5; ++i) u.push_back(integer_field(n, rng));
    const auto fast = q_op(u[0], u[1], u[2], u[3], u[4], Band::kFull, QPath::kFast);
    expect_identical(fast, brute_quintilinear(u[0], u[1], u[2], u[3], u[4], FrequencyMask::quintilinear()));
    expect_identical(fast, q_op(u[0], u[1], u[2], u[3], u[4], Band::kFull, QPath::kBrute));
  }
}

TEST(Nonlinearity, FourierFormsMatchPhysicalForms) {
  Rng rng(5);
  const auto v = random_field(8, rng);
  EXPECT_LT(l2_distance(t_full(v, v, v), script_T_physical(v)), 1e-12);
  EXPECT_LT(l2_distance(q_op(v, v, v, v, v), script_Q_physical(v)), 1e-12);
  EXPECT_LT(l2_distance(nls_star_fourier(v), nls_star_physical(v)), 1e-12);
  EXPECT_LT(l2_distance(t_full(v, v, v, Band::kFull), script_T_physical(v, Band::kFull)), 1e-12);
}

TEST(Nonlinearity, BandSelection) {
  Rng rng(6);
  const auto v = random_field(4, rng);
  EXPECT_EQ(t_full(v, v, v).cutoff(), 4);
  EXPECT_EQ(t_full(v, v, v, Band::kFull).cutoff(), 12);
  EXPECT_EQ(q_op(v, v, v, v, v, Band::kFull).cutoff(), 20);
}

TEST(Nonlinearity, PlaneWaveDnlsTerm) {
  // i d/dx (|A|^2 A e^{inx}) = -n |A|^2 A e^{inx}
  const auto u = SpectralField::plane_wave(6, 0.7, 2);
  const auto f = dnls_nonlinearity(u);
  EXPECT_LT(l2_distance(f, -2.0 * 0.49 * u), 1e-13);
}

TEST(Nonlinearity, RawConvolutionExactOnIntegers) {
  Rng rng(7);
  const auto a = integer_field(4, rng), b = integer_field(4, rng);
  const auto c = raw_convolution(a, b);
  for (int xi = -8; xi <= 8; ++xi) {
    Complex s{};
    for (int k = -4; k <= 4; ++k) s += a[k] * b[xi - k];
    EXPECT_EQ(c[xi], s);
  }
}

TEST(Resonance, IdentityHolds) {
  const auto r = resonance_check(7, -3, 11, 2.5, -1.25, 4.0);
  EXPECT_EQ(r.integer_lhs, r.integer_rhs);
  EXPECT_EQ(r.integer_rhs, r.integer_alt);
  EXPECT_NEAR(r.lhs, r.rhs, 1e-12);
  const auto ref = checks::resonance_sides(7, -3, 11, 2.5L, -1.25L, 4.0L);
  EXPECT_NEAR(static_cast<double>(ref.lhs), r.lhs, 1e-12);
  const auto scan = resonance_scan(2000, 1);
  EXPECT_EQ(scan.integer_failures, 0);
  EXPECT_LT(scan.max_mixed_error, 1e-12);
}
