#pragma once

#include <vector>

#include "dnls/scan_report.hpp"

namespace dnls::estimates {

// The family f0..f3 of the endpoint counterexample: f0 and f2 sit at the
// single frequencies 0 and 1, f1 and f3 carry the weight
// <xi>^{-s_decay} ln^{-log_power}<xi> on 0 < |xi| <= N.
struct CounterexampleOptions {
  double s_decay = 0.25;
  double log_power = 1.0 / 3.0;
  bool regularized = false;  // ln(<xi> + e) instead of ln <xi>, for exploratory scans
};

// sum_{1 <= |xi| <= N} <xi>^{-(2 s_decay + 1/2)} ln^{-2 log_power}<xi>
double trilinear_counterexample_sum(long long n, const CounterexampleOptions& opt = {});
// Same sum at several increasing N in one pass.
std::vector<double> counterexample_partial_sums(const std::vector<long long>& ns,
                                                const CounterexampleOptions& opt = {});

struct AffineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};
AffineFit affine_fit(const std::vector<double>& x, const std::vector<double>& y);

// ||f1||_{l^{r'} L^{q'}}, truncated at N.
double counterexample_f1_norm(long long n, double r_dual = 4.0, double q_dual = 2.0,
                              const CounterexampleOptions& opt = {});

// Integral of the four indicator factors (no modulation weights); equals 16/3.
double indicator_integral();

// Left side of the dual trilinear form for the family at truncation N,
// with the modulation weights integrated exactly in tau (b <= 0 is the
// weight exponent of the output modulation).
double counterexample_lhs(long long n, double b = 0.0, const CounterexampleOptions& opt = {});

// lhs / (||f0||_{l^r L^p} ||f1|| ||f2|| ||f3||_{l^{r'} L^{q'}}): the ratio of
// the two sides of the trilinear estimate tested on the family.
double counterexample_ratio(long long n, double r, double p, double q, double b = 0.0,
                            const CounterexampleOptions& opt = {});

// Rows N: partial sum, f1 norm, lhs, ratio at r = 4/3. Summary holds the
// affine fit of the partial sums against ln^{1 - 2 log_power} N.
ScanReport counterexample_scan(const std::vector<long long>& ns, const CounterexampleOptions& opt = {});

}  // namespace dnls::estimates
