#pragma once

#include <cstdint>
#include <vector>

#include "dnls/scan_report.hpp"

namespace dnls::estimates {

// #{(n1, n2) in N^2 : n1 n2 = r}
long long divisor_count(long long r);

// #{(n1, n2) in N^2 : n1 n2 = r, 3 |n1 - n2| <= r^{1/6}}, decided with the
// exact integer test 729 (n1 - n2)^6 <= r.
int refined_divisor_count(long long r);

struct DivisorTable {
  std::vector<int> count;    // index r = 0..max (0 unused)
  std::vector<int> refined;
};
// Sieve over 1..max.
DivisorTable divisor_table(long long max);

// Rows r = 1..max with count, refined count and count / r^exponent.
// Summary: max refined count and where, and the witness constant
// c = max count / r^exponent.
ScanReport divisor_scan(long long max, double exponent = 0.2, bool rows = true);

}  // namespace dnls::estimates
