#pragma once

#include <vector>

#include "dnls/scan_report.hpp"

namespace dnls::estimates {

struct ConvolutionBound {
  double integral = 0.0;  // int <s-a>^{-alpha} <s-b>^{-beta} ds
  double gamma = 0.0;
  double bound = 0.0;     // <a-b>^{-gamma}
  double ratio = 0.0;     // integral / bound
};

// gamma = alpha + beta - 1 (beta < 1), alpha - eps (beta = 1), alpha (beta > 1)
double convolution_gamma(double alpha, double beta, double eps);

// Requires 0 <= alpha <= beta, alpha + beta > 1.
ConvolutionBound convolution_bound_check(double alpha, double beta, double a, double b,
                                         double eps = 0.01);

// Ratio over b - a in `distances` with a = 0.
ScanReport convolution_bound_scan(double alpha, double beta, const std::vector<double>& distances,
                                  double eps = 0.01);

}  // namespace dnls::estimates
