#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "dnls/field_io.hpp"
#include "dnls/random.hpp"
#include "dnls/scan_report.hpp"

using namespace dnls;

TEST(Rng, Deterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.uniform(), b.uniform());
    EXPECT_EQ(a.normal(), b.normal());
  }
}

TEST(Rng, IntegerRangeIsInclusive) {
  Rng rng(1);
  bool lo = false, hi = false;
  for (int i = 0; i < 2000; ++i) {
    const auto k = rng.integer(-2, 2);
    ASSERT_GE(k, -2);
    ASSERT_LE(k, 2);
    lo = lo || k == -2;
    hi = hi || k == 2;
  }
  EXPECT_TRUE(lo && hi);
}

TEST(Rng, NormalMoments) {
  Rng rng(7);
  double s = 0.0, s2 = 0.0, c2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    s += x;
    s2 += x * x;
    c2 += std::norm(rng.complex_normal());
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
  EXPECT_NEAR(c2 / n, 1.0, 0.01);
}

TEST(RandomField, NormalizationAndActiveBand) {
  Rng rng(3);
  RandomFieldOptions opt;
  opt.l2 = 0.5;
  opt.active = 2;
  const auto f = random_field(8, rng, opt);
  EXPECT_NEAR(f.l2_norm(), 0.5, 1e-14);
  for (int xi = 3; xi <= 8; ++xi) {
    EXPECT_EQ(f[xi], Complex{});
    EXPECT_EQ(f[-xi], Complex{});
  }
}

TEST(RandomTrajectory, VanishesOutsideSupport) {
  Rng rng(9);
  const auto u = random_trajectory(4, 1.0, 40, 0.5, rng);
  EXPECT_EQ(u.steps(), 40);
  for (int k = 0; k <= u.steps(); ++k) {
    if (std::abs(u.time(k)) >= 0.5) {
      EXPECT_TRUE(u[k].is_zero()) << u.time(k);
    }
  }
  EXPECT_FALSE(u[u.center_index()].is_zero());
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(format_double(1e6), "1000000");
  EXPECT_EQ(format_double(-1e-10), "-1e-10");
  EXPECT_EQ(format_double(INFINITY), "inf");
  for (double v : {1.0 / 3.0, std::sqrt(2.0), 6.02214076e23, 5e-324})
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
}

TEST(FieldIo, FieldRoundTripIsExact) {
  Rng rng(5);
  const auto f = random_field(6, rng);
  std::stringstream ss;
  io::write_field(ss, f);
  const auto g = io::read_field(ss);
  ASSERT_EQ(g.cutoff(), 6);
  for (int xi = -6; xi <= 6; ++xi) EXPECT_EQ(g[xi], f[xi]);
}

TEST(FieldIo, TrajectoryRoundTripKeepsProfile) {
  Rng rng(6);
  const auto u = random_trajectory(3, 0.5, 10, 0.5, rng).with_profile(CutoffProfile::bump(0.25));
  const auto path = std::filesystem::temp_directory_path() / "dnls_unit_traj.csv";
  io::save_trajectory(path.string(), u);
  EXPECT_EQ(io::peek_kind(path.string()), "trajectory");
  const auto v = io::load_trajectory(path.string());
  std::filesystem::remove(path);
  EXPECT_EQ(v.steps(), 10);
  EXPECT_EQ(v.half_width(), 0.5);
  EXPECT_EQ(v.profile().kind, CutoffProfile::Kind::kBump);
  EXPECT_EQ(v.profile().scale, 0.25);
  EXPECT_EQ(sup_l2_distance(u, v), 0.0);
}

TEST(FieldIo, RejectsGarbage) {
  std::stringstream ss("not a header\n1,2,3\n");
  EXPECT_THROW(io::read_field(ss), std::exception);
}

TEST(ScanReport, CsvAndColumns) {
  ScanReport rep;
  rep.name = "demo";
  rep.parameter_names = {"n"};
  rep.value_names = {"a", "b"};
  rep.rows = {{{1}, {0.5, 2}}, {{2}, {1.5, -1}}};
  EXPECT_EQ(to_csv(rep), "n,a,b\n1,0.5,2\n2,1.5,-1\n");
  EXPECT_EQ(rep.column("b"), (std::vector<double>{2, -1}));
  EXPECT_EQ(rep.max_of("a").second, 1u);
  EXPECT_THROW(rep.value_index("c"), std::exception);
  EXPECT_EQ(to_json(rep), to_json(rep));
}
