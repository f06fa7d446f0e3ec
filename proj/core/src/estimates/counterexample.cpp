#include "dnls/estimates/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "dnls/error.hpp"
#include "dnls/norms.hpp"
#include "dnls/spectral_field.hpp"

namespace dnls::estimates {

namespace {

double log_bracket(long long xi, const CounterexampleOptions& opt) {
  const double b = bracket(static_cast<double>(xi));
  return std::log(opt.regularized ? b + std::numbers::e : b);
}

// <xi>^{-s} ln^{-p}<xi>, zero at xi = 0
double weight(long long xi, const CounterexampleOptions& opt) {
  if (xi == 0) return 0.0;
  return std::pow(bracket(static_cast<double>(xi)), -opt.s_decay) *
         std::pow(log_bracket(xi, opt), -opt.log_power);
}

}  // namespace

std::vector<double> counterexample_partial_sums(const std::vector<long long>& ns,
                                                const CounterexampleOptions& opt) {
  require(std::is_sorted(ns.begin(), ns.end()) && !ns.empty() && ns.front() >= 1,
          "truncations must be positive and increasing");
  std::vector<double> out;
  long double acc = 0.0L;
  long long xi = 0;
  const double e = 2.0 * opt.s_decay + 0.5;
  for (long long n : ns) {
    for (; xi < n; ) {
      ++xi;
      // xi and -xi contribute equally
      acc += 2.0L * std::pow(bracket(static_cast<double>(xi)), -e) *
             std::pow(log_bracket(xi, opt), -2.0 * opt.log_power);
    }
    out.push_back(static_cast<double>(acc));
  }
  return out;
}

double trilinear_counterexample_sum(long long n, const CounterexampleOptions& opt) {
  require(n >= 1, "truncation must be at least 1");
  return counterexample_partial_sums({n}, opt).front();
}

AffineFit affine_fit(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, "fit needs at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  require(sxx > 0.0, "fit abscissae must not all coincide");
  AffineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    ss_res += r * r;
  }
  f.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return f;
}

double counterexample_f1_norm(long long n, double r_dual, double q_dual,
                              const CounterexampleOptions& opt) {
  require(n >= 1 && r_dual >= 1.0 && q_dual >= 1.0, "bad norm parameters");
  long double acc = 0.0L;
  for (long long xi = 1; xi <= n; ++xi) acc += 2.0L * std::pow(weight(xi, opt), r_dual);
  // the tau profile is the indicator of an interval of length 2
  const double tau = std::isinf(q_dual) ? 1.0 : std::pow(2.0, 1.0 / q_dual);
  return tau * std::pow(static_cast<double>(acc), 1.0 / r_dual);
}

double indicator_integral() {
  // int_{[-1,1]^2} |[-1,1] cap [t - v - 1, t - v + 1]| dt dv
  using GL = boost::math::quadrature::gauss<double, 20>;
  auto inner = [](double t) {
    auto len = [t](double v) { return 2.0 - std::abs(t - v); };
    return GL::integrate(len, -1.0, t) + GL::integrate(len, t, 1.0);
  };
  return GL::integrate(inner, -1.0, 1.0);
}

namespace {

using GL = boost::math::quadrature::gauss<double, 30>;

// Tau integrals of the modulation weights with sigma_1 fixed through v.
double kernel(double v, double b) {
  auto outer = [v, b](double tau) {
    const double lo = std::max(-1.0, tau - v - 1.0);
    const double hi = std::min(1.0, tau - v + 1.0);
    if (hi <= lo) return 0.0;
    auto inner = [tau, v](double t2) {
      return 1.0 / std::sqrt(bracket(t2 + 1.0) * bracket(tau - v - t2));
    };
    return std::pow(bracket(tau), b) * GL::integrate(inner, lo, hi);
  };
  const double m = std::clamp(v, -1.0, 1.0);
  return GL::integrate(outer, -1.0, m) + GL::integrate(outer, m, 1.0);
}

struct KernelTable {
  std::vector<double> v, w;  // nodes times weights, K folded in
};

KernelTable kernel_table(double b) {
  KernelTable t;
  const auto& x = GL::abscissa();
  const auto& w = GL::weights();
  for (double centre : {-0.5, 0.5})
    for (std::size_t i = 0; i < x.size(); ++i)
      for (double sgn : {-1.0, 1.0}) {
        if (i == 0 && sgn < 0 && x[0] == 0.0) continue;
        const double v = centre + 0.5 * sgn * x[i];
        t.v.push_back(v);
        t.w.push_back(0.5 * w[i] * kernel(v, b));
      }
  return t;
}

}  // namespace

double counterexample_lhs(long long n, double b, const CounterexampleOptions& opt) {
  require(n >= 1, "truncation must be at least 1");
  require(b <= 0.0, "output modulation exponent b must be <= 0");
  const auto t = kernel_table(b);
  long double acc = 0.0L;
  const double xi2_factor = std::pow(bracket(1.0), 0.5);
  for (long long xi1 = -n; xi1 <= n; ++xi1) {
    const long long xi3 = -xi1 - 1;
    if (xi1 == 0 || xi3 == 0 || std::abs(xi3) > n) continue;
    // sigma_1 = v - (2 xi1 + 1)
    const double c = 2.0 * static_cast<double>(xi1) + 1.0;
    double j = 0.0;
    for (std::size_t k = 0; k < t.v.size(); ++k) j += t.w[k] / std::sqrt(bracket(t.v[k] - c));
    const double x1 = static_cast<double>(xi1), x3 = static_cast<double>(xi3);
    acc += std::abs(x3) * weight(xi1, opt) * weight(xi3, opt) * j /
           (std::sqrt(bracket(x1)) * xi2_factor * std::sqrt(bracket(x3)));
  }
  return static_cast<double>(acc);
}

double counterexample_ratio(long long n, double r, double p, double q, double b,
                            const CounterexampleOptions& opt) {
  require(r >= 1.0 && p >= 1.0 && q >= 1.0, "exponents must be >= 1");
  const double rd = dual_exponent(r), qd = dual_exponent(q);
  auto indicator_norm = [](double e) { return std::isinf(e) ? 1.0 : std::pow(2.0, 1.0 / e); };
  const double f0 = indicator_norm(p);
  const double f2 = indicator_norm(qd);
  const double f1 = std::isinf(rd) ? indicator_norm(qd) * weight(1, opt)
                                   : counterexample_f1_norm(n, rd, qd, opt);
  return counterexample_lhs(n, b, opt) / (f0 * f1 * f2 * f1);
}

ScanReport counterexample_scan(const std::vector<long long>& ns, const CounterexampleOptions& opt) {
  const auto sums = counterexample_partial_sums(ns, opt);
  ScanReport rep;
  rep.name = "counterexample";
  rep.parameter_names = {"N"};
  rep.value_names = {"partial_sum", "growth_variable", "f1_norm", "lhs", "ratio"};
  std::vector<double> x;
  const double expo = 1.0 - 2.0 * opt.log_power;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double n = static_cast<double>(ns[i]);
    x.push_back(std::pow(std::log(n), expo));
    rep.rows.push_back({{n},
                        {sums[i], x.back(), counterexample_f1_norm(ns[i], 4.0, 2.0, opt),
                         counterexample_lhs(ns[i], 0.0, opt),
                         counterexample_ratio(ns[i], 4.0 / 3.0, 2.0, 2.0, 0.0, opt)}});
  }
  if (ns.size() >= 2) {
    const auto fit = affine_fit(x, sums);
    rep.summary["fit_slope"] = fit.slope;
    rep.summary["fit_intercept"] = fit.intercept;
    rep.summary["fit_r_squared"] = fit.r_squared;
    rep.summary["partial_sum_growth"] = sums.back() / sums.front();
    const auto f1 = rep.column("f1_norm");
    double cauchy = 0.0;
    for (std::size_t i = 1; i < f1.size(); ++i) cauchy = std::max(cauchy, std::abs(f1[i] - f1[i - 1]) / f1[i]);
    rep.summary["f1_max_consecutive_change"] = cauchy;
    const auto ratio = rep.column("ratio");
    rep.summary["ratio_growth"] = ratio.back() / ratio.front();
  }
  rep.summary["indicator_integral"] = indicator_integral();
  rep.notes["growth_variable"] = "ln(N)^(1 - 2 log_power)";
  return rep;
}

}  // namespace dnls::estimates
