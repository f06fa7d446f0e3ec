#include <gtest/gtest.h>

#include <cmath>

#include "dnls/estimates/convolution_bound.hpp"
#include "dnls/estimates/counterexample.hpp"
#include "dnls/estimates/divisors.hpp"
#include "dnls/estimates/lattice_sums.hpp"
#include "dnls/estimates/ratio_scans.hpp"
#include "dnls_checks/oracles.hpp"

using namespace dnls;
using namespace dnls::estimates;

TEST(Divisors, CountsMatchTrialDivision) {
  for (long long r = 1; r <= 3000; ++r) {
    ASSERT_EQ(divisor_count(r), checks::naive_divisor_count(r)) << r;
    ASSERT_EQ(refined_divisor_count(r), checks::naive_refined_count(r)) << r;
  }
  const auto t = divisor_table(3000);
  for (long long r = 1; r <= 3000; ++r) {
    ASSERT_EQ(t.count[r], divisor_count(r));
    ASSERT_EQ(t.refined[r], refined_divisor_count(r));
  }
}

TEST(Divisors, KnownValues) {
  EXPECT_EQ(divisor_count(720720), 240);
  EXPECT_EQ(refined_divisor_count(1), 1);
  EXPECT_EQ(refined_divisor_count(756), 2);  // 27 * 28, 729 <= 756
  EXPECT_EQ(refined_divisor_count(755), 0);
}

TEST(Divisors, ScanSummary) {
  const auto rep = divisor_scan(20000, 0.2, false);
  EXPECT_TRUE(rep.rows.empty());
  EXPECT_LE(rep.summary.at("max_refined"), 2.0);
  EXPECT_EQ(rep.summary.at("refined_violations"), 0.0);
}

TEST(LatticeSums, VariantNames) {
  for (auto v : all_sum_variants()) EXPECT_EQ(sum_variant_from_string(to_string(v)), v);
  EXPECT_THROW(sum_variant_from_string("sum3"), std::exception);
}

TEST(LatticeSums, FastSupMatchesDirectGrid) {
  SumGrid grid;
  grid.a_min = -12.0;
  grid.a_max = 12.0;
  grid.a_step = 0.75;
  grid.anchor_min = -4;
  grid.anchor_max = 4;
  for (auto v : all_sum_variants()) {
    double best = 0.0;
    for (double a : grid.a_values())
      for (int anchor = grid.anchor_min; anchor <= grid.anchor_max; ++anchor)
        best = std::max(best, lattice_sum(v, 0.5, a, anchor, 24));
    const auto fast = lattice_sup(v, 0.5, grid, 24);
    EXPECT_NEAR(fast.sup / best, 1.0, 1e-10) << to_string(v);
    EXPECT_NEAR(lattice_sum(v, 0.5, fast.a, fast.anchor, 24), fast.sup, 1e-10 * best);
  }
}

TEST(LatticeSums, ScanReportsChange) {
  SumGrid grid;
  grid.a_min = -5.0;
  grid.a_max = 5.0;
  grid.a_step = 1.0;
  grid.anchor_min = -2;
  grid.anchor_max = 2;
  const auto rep = lattice_scan(SumVariant::kSum2, 0.5, grid, {16, 32, 64});
  ASSERT_EQ(rep.rows.size(), 3u);
  const auto sup = rep.column("sup");
  EXPECT_LE(sup[0], sup[1]);
  EXPECT_LE(sup[1], sup[2]);
  EXPECT_EQ(rep.column("relative_change")[0], 0.0);
}

TEST(ConvolutionBound, GammaCases) {
  EXPECT_DOUBLE_EQ(convolution_gamma(0.6, 0.8, 0.01), 0.4);
  EXPECT_DOUBLE_EQ(convolution_gamma(0.6, 1.0, 0.01), 0.59);
  EXPECT_DOUBLE_EQ(convolution_gamma(0.6, 1.5, 0.01), 0.6);
}

TEST(ConvolutionBound, RatioStaysBounded) {
  const auto rep = convolution_bound_scan(0.7, 0.9, {1.0, 10.0, 100.0, 1000.0});
  for (double v : rep.column("ratio")) {
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 20.0);
  }
}

TEST(Counterexample, SumsMatchLongDouble) {
  for (long long n : {10LL, 1000LL, 100000LL}) {
    const double lib = trilinear_counterexample_sum(n);
    const double ref = static_cast<double>(checks::naive_counterexample_sum(n, 0.25, 1.0 / 3.0));
    EXPECT_NEAR(lib / ref, 1.0, 1e-12) << n;
  }
  const auto many = counterexample_partial_sums({10, 1000});
  EXPECT_DOUBLE_EQ(many[1], trilinear_counterexample_sum(1000));
}

TEST(Counterexample, AffineFitOfLine) {
  const auto fit = affine_fit({1.0, 2.0, 3.0, 4.0}, {3.0, 5.0, 7.0, 9.0});
  EXPECT_NEAR(fit.slope, 2.0, 1e-14);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-14);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-14);
}

TEST(Counterexample, IndicatorIntegral) { EXPECT_NEAR(indicator_integral(), 16.0 / 3.0, 1e-12); }

TEST(Counterexample, RatioGrowsSlowly) {
  const double a = counterexample_ratio(100, 4.0 / 3.0, 2.0, 2.0);
  const double b = counterexample_ratio(10000, 4.0 / 3.0, 2.0, 2.0);
  EXPECT_GT(b, a);
  EXPECT_LT(b / a, 3.0);
}

TEST(RatioScans, StepsAreEven) {
  for (double w : {1.0, 10.0, 123.0}) EXPECT_EQ(steps_for_modulation(w, 1.0) % 2, 0);
}

TEST(RatioScans, Reproducible) {
  RatioScanOptions opt;
  opt.samples = 5;
  opt.cutoff = 3;
  opt.refine = 1;
  opt.refine_budget = 20;
  opt.seed = 17;
  const auto a = to_json(trilinear_ratio_scan(2.0, 2.0, opt));
  EXPECT_EQ(a, to_json(trilinear_ratio_scan(2.0, 2.0, opt)));
  opt.seed = 18;
  EXPECT_NE(a, to_json(trilinear_ratio_scan(2.0, 2.0, opt)));
}

TEST(RatioScans, RejectInvalidParameters) {
  EXPECT_THROW(trilinear_ratio_scan(1.2, 2.0), std::exception);
  EXPECT_THROW(strichartz_ratio_scan(0.1, 0.45), std::exception);
  RatioScanOptions opt;
  opt.samples = 0;
  EXPECT_THROW(quintilinear_ratio_scan(2.0, 2.0, 0.45, opt), std::exception);
}

TEST(RatioScans, EvidenceFlagAndKinds) {
  RatioScanOptions opt;
  opt.samples = 3;
  opt.cutoff = 3;
  opt.refine = 1;
  opt.refine_budget = 10;
  opt.inject_counterexample = true;
  const auto rep = trilinear_ratio_scan(4.0 / 3.0, 2.0, opt);
  EXPECT_TRUE(rep.evidence);
  EXPECT_TRUE(rep.summary.count("injected_ratio"));
  EXPECT_GE(rep.summary.at("max_ratio"), rep.summary.at("random_max_ratio"));
}
