#include "dnls/estimates/divisors.hpp"

#include <cmath>

#include "dnls/error.hpp"

namespace dnls::estimates {

namespace {

long long isqrt(long long r) {
  auto s = static_cast<long long>(std::sqrt(static_cast<long double>(r)));
  while (s * s > r) --s;
  while ((s + 1) * (s + 1) <= r) ++s;
  return s;
}

bool close_pair(long long d, long long r) {
  // 729 d^6 <= r; d^6 overflows quickly, so bail out early
  if (d > 2000) return false;
  __extension__ using i128 = __int128;
  const i128 d3 = static_cast<i128>(d) * d * d;
  return 729 * d3 * d3 <= static_cast<i128>(r);
}

}  // namespace

long long divisor_count(long long r) {
  require(r >= 1, "divisor count needs r >= 1");
  long long count = 0;
  const long long s = isqrt(r);
  for (long long d = 1; d <= s; ++d)
    if (r % d == 0) count += (d * d == r) ? 1 : 2;
  return count;
}

int refined_divisor_count(long long r) {
  require(r >= 1, "refined divisor count needs r >= 1");
  int count = 0;
  // all admissible n1 <= sqrt(r) lie within r^{1/6}/3 of sqrt(r)
  for (long long n1 = isqrt(r); n1 >= 1; --n1) {
    const long long n2min = (r + n1 - 1) / n1;
    if (!close_pair(n2min - n1, r)) break;
    if (r % n1 == 0) count += (n1 * n1 == r) ? 1 : 2;
  }
  return count;
}

DivisorTable divisor_table(long long max) {
  require(max >= 1, "scan bound must be at least 1");
  DivisorTable t;
  t.count.assign(max + 1, 0);
  t.refined.assign(max + 1, 0);
  for (long long d = 1; d <= max; ++d)
    for (long long m = d; m <= max; m += d) ++t.count[m];
  for (long long n1 = 1; n1 * n1 <= max; ++n1) {
    t.refined[n1 * n1] += 1;
    for (long long n2 = n1 + 1; n1 * n2 <= max; ++n2) {
      const long long r = n1 * n2;
      // 729 d^6 - n1 (n1 + d) is convex in d and negative at 0: one sign change
      if (!close_pair(n2 - n1, r)) break;
      t.refined[r] += 2;
    }
  }
  return t;
}

ScanReport divisor_scan(long long max, double exponent, bool rows) {
  const auto t = divisor_table(max);
  ScanReport rep;
  rep.name = "divisors";
  rep.parameter_names = {"r"};
  rep.value_names = {"count", "refined", "count_over_r_pow"};
  int max_refined = 0;
  long long arg_refined = 1;
  double witness = 0.0;
  long long arg_witness = 1;
  long long refined_over_two = 0;
  for (long long r = 1; r <= max; ++r) {
    const double w = t.count[r] / std::pow(static_cast<double>(r), exponent);
    if (t.refined[r] > max_refined) {
      max_refined = t.refined[r];
      arg_refined = r;
    }
    if (t.refined[r] > 2) ++refined_over_two;
    if (w > witness) {
      witness = w;
      arg_witness = r;
    }
    if (rows)
      rep.rows.push_back({{static_cast<double>(r)},
                          {static_cast<double>(t.count[r]), static_cast<double>(t.refined[r]), w}});
  }
  rep.summary["max"] = static_cast<double>(max);
  rep.summary["max_refined"] = max_refined;
  rep.summary["argmax_refined"] = static_cast<double>(arg_refined);
  rep.summary["refined_violations"] = static_cast<double>(refined_over_two);
  rep.summary["exponent"] = exponent;
  rep.summary["witness_constant"] = witness;
  rep.summary["argmax_witness"] = static_cast<double>(arg_witness);
  return rep;
}

}  // namespace dnls::estimates
