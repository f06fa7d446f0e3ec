#include "dnls/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "dnls/error.hpp"
#include "dnls/fft.hpp"
#include "dnls/norms.hpp"
#include "dnls/random.hpp"

namespace dnls::gauge {

GaugeContext GaugeContext::for_cutoff(int cutoff) {
  require(cutoff >= 1, "gauge cutoff must be positive");
  GaugeContext ctx{cutoff, cutoff, 8 * cutoff};
  ctx.validate();
  return ctx;
}

GaugeContext GaugeContext::with_gauged_cutoff(int n) const {
  GaugeContext ctx = *this;
  ctx.gauged_cutoff = n;
  ctx.validate();
  return ctx;
}

GaugeContext GaugeContext::with_gridsize(int g) const {
  GaugeContext ctx = *this;
  ctx.gridsize = g;
  ctx.validate();
  return ctx;
}

void GaugeContext::validate() const {
  require(cutoff >= 1 && gauged_cutoff >= 1, "gauge cutoffs must be positive");
  require(gridsize >= 4 * cutoff + 1, "gauge grid must have at least 4N+1 points");
}

SpectralField primitive_I(const SpectralField& u) {
  const int n = u.cutoff();
  const int g = fft::good_size(4 * n + 1);
  auto x = to_physical(u, g);
  for (auto& v : x) v = std::norm(v);
  auto h = from_physical(x, 2 * n);
  SpectralField out(2 * n);
  for (int xi = -2 * n; xi <= 2 * n; ++xi)
    if (xi != 0) out.at(xi) = h[xi] / Complex(0.0, xi);
  return out;
}

namespace {

// exp(sign i I u) u on a grid of at least g points, projected to `out`.
GaugeOutput apply_multiplier(const SpectralField& u, double sign, int out, int g) {
  const int n = u.cutoff();
  g = fft::good_size(std::max({g, 4 * n + 1, 2 * out + 1}));
  const auto prim = to_physical(primitive_I(u), g);
  auto x = to_physical(u, g);
  for (int j = 0; j < g; ++j) x[j] *= std::polar(1.0, sign * prim[j].real());
  const auto full = from_physical(x, (g - 1) / 2);
  return {full.resized(out), full.tail_l2(out)};
}

}  // namespace

GaugeOutput gauge0(const SpectralField& u, const GaugeContext& ctx) {
  return apply_multiplier(u, -1.0, ctx.gauged_cutoff, ctx.gridsize);
}

GaugeOutput gauge0_inv(const SpectralField& v, const GaugeContext& ctx) {
  return apply_multiplier(v, +1.0, ctx.cutoff, ctx.gridsize);
}

SpectralField translate(const SpectralField& u, double t, Shift sign) {
  const double mass = u.l2_norm() * u.l2_norm() / kTwoPi;
  const double a = (sign == Shift::kMinus ? -2.0 : 2.0) * t * mass;
  SpectralField out = u;
  for (int xi = -u.cutoff(); xi <= u.cutoff(); ++xi) out.at(xi) *= std::polar(1.0, a * xi);
  return out;
}

Trajectory translate(const Trajectory& traj, Shift sign) {
  std::vector<SpectralField> out;
  out.reserve(traj.size());
  for (int k = 0; k <= traj.steps(); ++k) out.push_back(translate(traj[k], traj.time(k), sign));
  return Trajectory(traj.half_width(), std::move(out), traj.profile());
}

SpectralField gauge_field(const SpectralField& u, double t, const GaugeContext& ctx,
                          double* truncated_l2) {
  auto g = gauge0(translate(u, t, Shift::kMinus), ctx);
  if (truncated_l2) *truncated_l2 = g.truncated_l2;
  return std::move(g.field);
}

SpectralField gauge_field_inv(const SpectralField& v, double t, const GaugeContext& ctx,
                              double* truncated_l2) {
  auto g = gauge0_inv(translate(v, t, Shift::kPlus), ctx);
  if (truncated_l2) *truncated_l2 = g.truncated_l2;
  return std::move(g.field);
}

namespace {

GaugeTrajectory map_samples(const Trajectory& traj, const GaugeContext& ctx, bool inverse) {
  std::vector<SpectralField> out;
  out.reserve(traj.size());
  double worst = 0.0;
  for (int k = 0; k <= traj.steps(); ++k) {
    double tail = 0.0;
    out.push_back(inverse ? gauge_field_inv(traj[k], traj.time(k), ctx, &tail)
                          : gauge_field(traj[k], traj.time(k), ctx, &tail));
    worst = std::max(worst, tail);
  }
  return {Trajectory(traj.half_width(), std::move(out), traj.profile()), worst};
}

}  // namespace

GaugeTrajectory gauge_full(const Trajectory& traj, const GaugeContext& ctx) {
  return map_samples(traj, ctx, false);
}

GaugeTrajectory gauge_full_inv(const Trajectory& traj, const GaugeContext& ctx) {
  return map_samples(traj, ctx, true);
}

ScanReport uniform_continuity_probe(double amplitude, double s, double r,
                                    const std::vector<int>& n_list, int time_samples) {
  require(!n_list.empty(), "probe needs at least one frequency");
  require(std::is_sorted(n_list.begin(), n_list.end()) && n_list.front() >= 1,
          "probe frequencies must be positive and increasing");
  require(time_samples >= 2, "probe needs at least two time samples");
  const auto spec = NormSpec::spatial(s, r);
  ScanReport rep;
  rep.name = "uniform_continuity";
  rep.parameter_names = {"n"};
  rep.value_names = {"input_gap", "translation_gap", "gauge_gap"};
  for (int n : n_list) {
    const double a = amplitude * std::pow(static_cast<double>(n), -s);
    const auto w = SpectralField::plane_wave(n, a, n);
    auto u = w;
    u.at(0) += kSqrtTwoPi / std::sqrt(static_cast<double>(n));
    const auto ctx = GaugeContext::for_cutoff(n);
    double tr = 0.0, gg = 0.0;
    for (int k = 0; k < time_samples; ++k) {
      const double t = -1.0 + 2.0 * k / (time_samples - 1);
      tr = std::max(tr, h_norm(translate(u, t, Shift::kMinus) - translate(w, t, Shift::kMinus), spec));
      gg = std::max(gg, h_norm(gauge_field(u, t, ctx) - gauge_field(w, t, ctx), spec));
    }
    rep.rows.push_back({{static_cast<double>(n)}, {h_norm(u - w, spec), tr, gg}});
  }
  const auto in = rep.column("input_gap");
  const auto out = rep.column("translation_gap");
  rep.summary["input_decay"] = in.front() / in.back();
  rep.summary["translation_gap_min"] = *std::min_element(out.begin(), out.end());
  rep.summary["translation_gap_max"] = *std::max_element(out.begin(), out.end());
  rep.notes["gauge_gap"] = "recorded only; no bound asserted";
  return rep;
}

ScanReport lipschitz_probe(int cutoff, int pairs, double l2, double s, double r,
                           std::uint64_t seed, double horizon) {
  require(pairs >= 1 && l2 > 0.0, "lipschitz probe needs pairs >= 1 and a positive L2 norm");
  const auto spec = NormSpec::spatial(s, r);
  const auto ctx = GaugeContext::for_cutoff(cutoff);
  Rng rng(seed);
  RandomFieldOptions opt;
  opt.l2 = l2;
  ScanReport rep;
  rep.name = "gauge_lipschitz";
  rep.seed = seed;
  rep.evidence = true;
  rep.parameter_names = {"pair", "delta"};
  rep.value_names = {"input_gap", "output_gap", "ratio"};
  for (int i = 0; i < pairs; ++i) {
    const auto u = random_field(cutoff, rng, opt);
    const double delta = std::pow(10.0, rng.uniform(-3.0, 0.0));
    auto w = u + delta * random_field(cutoff, rng, opt);
    w *= l2 / w.l2_norm();
    const double in = h_norm(u - w, spec);
    double out = 0.0;
    for (double t : {-horizon, 0.0, horizon})
      out = std::max(out, h_norm(gauge_field(u, t, ctx) - gauge_field(w, t, ctx), spec));
    rep.rows.push_back({{static_cast<double>(i), delta}, {in, out, out / in}});
  }
  rep.summary["max_ratio"] = rep.max_of("ratio").first;
  return rep;
}

}  // namespace dnls::gauge
