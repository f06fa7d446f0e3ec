#include "dnls/estimates/lattice_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dnls/error.hpp"
#include "dnls/spectral_field.hpp"

namespace dnls::estimates {

std::string to_string(SumVariant v) {
  switch (v) {
    case SumVariant::kSum01: return "sum01";
    case SumVariant::kSum02: return "sum02";
    case SumVariant::kSum1: return "sum1";
    case SumVariant::kSum2: return "sum2";
  }
  return "unknown";
}

SumVariant sum_variant_from_string(const std::string& name) {
  for (auto v : all_sum_variants())
    if (to_string(v) == name) return v;
  throw InvalidArgument("unknown sum variant '" + name + "' (expected sum01, sum02, sum1 or sum2)");
}

const std::vector<SumVariant>& all_sum_variants() {
  static const std::vector<SumVariant> v{SumVariant::kSum01, SumVariant::kSum02, SumVariant::kSum1,
                                         SumVariant::kSum2};
  return v;
}

std::vector<double> SumGrid::a_values() const {
  require(a_step > 0.0 && a_max >= a_min, "bad a-grid");
  require(anchor_max >= anchor_min, "bad anchor range");
  std::vector<double> out;
  const auto count = static_cast<long long>(std::floor((a_max - a_min) / a_step + 1e-9));
  for (long long i = 0; i <= count; ++i) out.push_back(a_min + static_cast<double>(i) * a_step);
  return out;
}

namespace {

bool anchored_at_xi(SumVariant v) { return v == SumVariant::kSum01 || v == SumVariant::kSum1; }

// Calls visit(n1, n2, weight) for every admissible pair.
template <class Visit>
void enumerate(SumVariant v, const std::vector<double>& pw, int offset, int anchor, int L,
               Visit&& visit) {
  auto p = [&](int k) { return pw[k + offset]; };
  const bool diff_weights = v == SumVariant::kSum01 || v == SumVariant::kSum02;
  for (int x = -L; x <= L; ++x)
    for (int xi2 = -L; xi2 <= L; ++xi2) {
      int xi, xi1;
      if (anchored_at_xi(v)) {
        xi = anchor;
        xi1 = x;
      } else {
        xi = x;
        xi1 = anchor;
      }
      if (xi1 == xi || xi2 == xi) continue;
      const int n1 = xi - xi1, n2 = xi - xi2;
      const double w = diff_weights ? p(n1) * p(n2) : p(xi1) * p(xi2);
      visit(n1, n2, w);
    }
}

std::vector<double> power_table(double eps, int reach) {
  std::vector<double> pw(2 * reach + 1);
  for (int k = -reach; k <= reach; ++k) pw[k + reach] = std::pow(bracket(k), -eps);
  return pw;
}

// Largest |xi - xi1| and |xi - xi2| reached by enumerate for anchors up to amax.
std::pair<int, int> difference_reach(SumVariant v, int amax, int L) {
  if (anchored_at_xi(v)) return {L + amax, L + amax};
  return {L + amax, 2 * L};
}

int weight_reach(SumVariant v, int amax, int L) {
  const auto [r1, r2] = difference_reach(v, amax, L);
  return std::max({r1, r2, L + amax});
}

void check(double eps, int truncation) {
  require(eps > 0.0, "eps must be positive");
  require(truncation >= 0, "truncation must be nonnegative");
}

}  // namespace

double lattice_sum(SumVariant v, double eps, double a, int anchor, int truncation) {
  check(eps, truncation);
  const int reach = weight_reach(v, std::abs(anchor), truncation);
  const auto pw = power_table(eps, reach);
  double sum = 0.0;
  enumerate(v, pw, reach, anchor, truncation, [&](int n1, int n2, double w) {
    sum += w * std::pow(bracket(a + 2.0 * n1 * static_cast<double>(n2)), -1.0 - eps);
  });
  return sum;
}

namespace {

constexpr int kNodes = 13;

struct FastTables {
  long long rmax = 0;
  long long near = 0;  // |r| < near is summed directly
  std::vector<double> avals;
  std::vector<double> nodes;
  std::vector<std::vector<double>> near_g;  // [a index][r + near]
  std::vector<std::vector<double>> far_g;   // [node][r + rmax], zero on the near band
  double c = 0.0, h = 0.0;
};

FastTables build_tables(SumVariant v, double eps, const SumGrid& grid, int L) {
  FastTables t;
  const int amax = std::max(std::abs(grid.anchor_min), std::abs(grid.anchor_max));
  const auto [r1, r2] = difference_reach(v, amax, L);
  t.rmax = static_cast<long long>(r1) * r2;
  t.avals = grid.a_values();
  t.c = 0.5 * (grid.a_min + grid.a_max);
  t.h = 0.5 * (grid.a_max - grid.a_min);
  auto g = [eps](double x) { return std::pow(bracket(x), -1.0 - eps); };
  const bool interpolate = static_cast<int>(t.avals.size()) > kNodes && t.h > 0.0;
  // far means |2r| >= 8h + |c|, at least 7h away from the a-range
  t.near = interpolate ? static_cast<long long>(std::ceil((8.0 * t.h + std::abs(t.c)) / 2.0)) : t.rmax + 1;
  t.near = std::min(t.near, t.rmax + 1);
  t.near_g.assign(t.avals.size(), std::vector<double>(2 * t.near + 1));
  for (std::size_t i = 0; i < t.avals.size(); ++i)
    for (long long r = -t.near + 1; r < t.near; ++r)
      t.near_g[i][r + t.near] = g(t.avals[i] + 2.0 * static_cast<double>(r));
  if (!interpolate) return t;
  for (int j = 0; j < kNodes; ++j)
    t.nodes.push_back(t.c + t.h * std::cos(std::numbers::pi * (j + 0.5) / kNodes));
  t.far_g.assign(kNodes, std::vector<double>(2 * t.rmax + 1, 0.0));
  for (int j = 0; j < kNodes; ++j)
    for (long long r = -t.rmax; r <= t.rmax; ++r)
      if (std::abs(r) >= t.near) t.far_g[j][r + t.rmax] = g(t.nodes[j] + 2.0 * static_cast<double>(r));
  return t;
}

// Interpolant through values at the Chebyshev nodes, evaluated at each a.
std::vector<double> chebyshev_eval(const std::vector<double>& f, const FastTables& t) {
  std::vector<double> coef(kNodes);
  for (int k = 0; k < kNodes; ++k) {
    double s = 0.0;
    for (int j = 0; j < kNodes; ++j) s += f[j] * std::cos(std::numbers::pi * k * (j + 0.5) / kNodes);
    coef[k] = (k == 0 ? 1.0 : 2.0) * s / kNodes;
  }
  std::vector<double> out;
  out.reserve(t.avals.size());
  for (double a : t.avals) {
    const double x = (a - t.c) / t.h;
    double b1 = 0.0, b2 = 0.0;
    for (int k = kNodes - 1; k >= 1; --k) {
      const double b0 = 2.0 * x * b1 - b2 + coef[k];
      b2 = b1;
      b1 = b0;
    }
    out.push_back(x * b1 - b2 + coef[0]);
  }
  return out;
}

}  // namespace

SumSup lattice_sup(SumVariant v, double eps, const SumGrid& grid, int truncation) {
  check(eps, truncation);
  const auto t = build_tables(v, eps, grid, truncation);
  const int reach =
      weight_reach(v, std::max(std::abs(grid.anchor_min), std::abs(grid.anchor_max)), truncation);
  const auto pw = power_table(eps, reach);
  std::vector<double> w(2 * t.rmax + 1);

  SumSup best{-1.0, 0.0, 0};
  std::vector<std::pair<int, std::vector<double>>> done;  // values are even in the anchor
  for (int anchor = grid.anchor_min; anchor <= grid.anchor_max; ++anchor) {
    std::vector<double> values;
    for (const auto& [k, vals] : done)
      if (k == std::abs(anchor)) values = vals;
    if (values.empty()) {
      std::fill(w.begin(), w.end(), 0.0);
      enumerate(v, pw, reach, anchor, truncation, [&](int n1, int n2, double wt) {
        w[static_cast<long long>(n1) * n2 + t.rmax] += wt;
      });
      values.assign(t.avals.size(), 0.0);
      if (!t.nodes.empty()) {
        std::vector<double> f(kNodes, 0.0);
        for (int j = 0; j < kNodes; ++j) {
          const auto& gj = t.far_g[j];
          double s = 0.0;
          for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * gj[i];
          f[j] = s;
        }
        values = chebyshev_eval(f, t);
      }
      for (std::size_t i = 0; i < t.avals.size(); ++i) {
        double s = 0.0;
        for (long long r = -t.near + 1; r < t.near; ++r) {
          if (std::abs(r) > t.rmax) continue;
          s += w[r + t.rmax] * t.near_g[i][r + t.near];
        }
        values[i] += s;
      }
      done.emplace_back(std::abs(anchor), values);
    }
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] > best.sup) best = {values[i], t.avals[i], anchor};
  }
  return best;
}

ScanReport lattice_scan(SumVariant v, double eps, const SumGrid& grid,
                          const std::vector<int>& truncations) {
  require(!truncations.empty(), "scan needs at least one truncation");
  ScanReport rep;
  rep.name = "lattice_sums_" + to_string(v);
  rep.parameter_names = {"truncation"};
  rep.value_names = {"sup", "argmax_a", "argmax_anchor", "relative_change"};
  double prev = 0.0;
  for (std::size_t i = 0; i < truncations.size(); ++i) {
    const auto s = lattice_sup(v, eps, grid, truncations[i]);
    const double change = i == 0 ? 0.0 : std::abs(s.sup - prev) / s.sup;
    rep.rows.push_back({{static_cast<double>(truncations[i])},
                        {s.sup, s.a, static_cast<double>(s.anchor), change}});
    prev = s.sup;
  }
  rep.notes["variant"] = to_string(v);
  rep.summary["eps"] = eps;
  rep.summary["final_sup"] = rep.rows.back().values[0];
  rep.summary["final_relative_change"] = rep.rows.back().values[3];
  return rep;
}

}  // namespace dnls::estimates
