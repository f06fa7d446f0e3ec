#include "dnls/estimates/convolution_bound.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "dnls/error.hpp"
#include "dnls/spectral_field.hpp"

namespace dnls::estimates {

double convolution_gamma(double alpha, double beta, double eps) {
  if (beta < 1.0) return alpha + beta - 1.0;
  if (beta == 1.0) return alpha - eps;
  return alpha;
}

ConvolutionBound convolution_bound_check(double alpha, double beta, double a, double b, double eps) {
  require(alpha >= 0.0 && alpha <= beta, "need 0 <= alpha <= beta");
  require(alpha + beta > 1.0, "need alpha + beta > 1");
  auto f = [=](double s) { return std::pow(bracket(s - a), -alpha) * std::pow(bracket(s - b), -beta); };
  const double lo = std::min(a, b), hi = std::max(a, b);

  // tails: s = c +- (1 - y) / y maps (0, 1] onto the half line; the
  // integrand is written with y factored out so it stays finite as y -> 0
  boost::math::quadrature::tanh_sinh<double> ts;
  auto tail = [&](double c, double dir) {
    return ts.integrate([&](double y) {
      if (y <= 0.0) return 0.0;
      const double ua = y * (c - a) + dir * (1.0 - y), ub = y * (c - b) + dir * (1.0 - y);
      return std::pow(y, alpha + beta - 2.0) * std::pow(y * y + ua * ua, -alpha / 2) *
             std::pow(y * y + ub * ub, -beta / 2);
    }, 0.0, 1.0);
  };
  double integral = tail(hi, 1.0) + tail(lo, -1.0);
  if (hi > lo) {
    // integrand peaks at both ends; split the middle in unit-scale pieces near them
    std::vector<double> cuts{lo};
    const double gap = hi - lo;
    for (double d : {1.0, 4.0, 16.0, 64.0})
      if (d < gap / 2) cuts.push_back(lo + d);
    for (double d : {64.0, 16.0, 4.0, 1.0})
      if (d < gap / 2) cuts.push_back(hi - d);
    cuts.push_back(hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      integral += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, cuts[i], cuts[i + 1], 15, 1e-13);
  }
  ConvolutionBound out;
  out.integral = integral;
  out.gamma = convolution_gamma(alpha, beta, eps);
  out.bound = std::pow(bracket(a - b), -out.gamma);
  out.ratio = out.integral / out.bound;
  return out;
}

ScanReport convolution_bound_scan(double alpha, double beta, const std::vector<double>& distances,
                                  double eps) {
  ScanReport rep;
  rep.name = "convolution_bound";
  rep.parameter_names = {"distance"};
  rep.value_names = {"integral", "bound", "ratio"};
  for (double d : distances) {
    const auto c = convolution_bound_check(alpha, beta, 0.0, d, eps);
    rep.rows.push_back({{d}, {c.integral, c.bound, c.ratio}});
  }
  rep.summary["alpha"] = alpha;
  rep.summary["beta"] = beta;
  rep.summary["gamma"] = convolution_gamma(alpha, beta, eps);
  rep.summary["max_ratio"] = rep.rows.empty() ? 0.0 : rep.max_of("ratio").first;
  return rep;
}

}  // namespace dnls::estimates
