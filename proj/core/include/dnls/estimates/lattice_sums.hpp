#pragma once

#include <string>
#include <vector>

#include "dnls/scan_report.hpp"

namespace dnls::estimates {

// The four lattice sums of <a + 2 (xi - xi1)(xi - xi2)>^{-1-eps} against
// weights of order -eps, over xi1, xi2 != xi:
//   kSum01: anchor xi,  summed over xi1, xi2, weights <xi-xi1>, <xi-xi2>
//   kSum02: anchor xi1, summed over xi,  xi2, weights <xi-xi1>, <xi-xi2>
//   kSum1:  anchor xi,  summed over xi1, xi2, weights <xi1>, <xi2>
//   kSum2:  anchor xi1, summed over xi,  xi2, weights <xi1>, <xi2>
// Both summation variables range over [-L, L].
enum class SumVariant { kSum01, kSum02, kSum1, kSum2 };

std::string to_string(SumVariant v);
SumVariant sum_variant_from_string(const std::string& name);
const std::vector<SumVariant>& all_sum_variants();

// Direct O(L^2) evaluation.
double lattice_sum(SumVariant v, double eps, double a, int anchor, int truncation);

struct SumGrid {
  double a_min = -100.0;
  double a_max = 100.0;
  double a_step = 0.5;
  int anchor_min = -50;
  int anchor_max = 50;

  std::vector<double> a_values() const;
};

struct SumSup {
  double sup = 0.0;
  double a = 0.0;
  int anchor = 0;
};

// Sup over the grid. Sums are grouped by the product r = n1 n2; the
// contribution of r far from the a-range is a smooth function of a and is
// interpolated in Chebyshev nodes, the rest is summed directly.
SumSup lattice_sup(SumVariant v, double eps, const SumGrid& grid, int truncation);

// One row per truncation: sup, argmax and relative change from the previous row.
ScanReport lattice_scan(SumVariant v, double eps, const SumGrid& grid,
                          const std::vector<int>& truncations);

}  // namespace dnls::estimates
