#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace dnls::checks {

struct BatteryOptions {
  bool quick = false;  // reduced sizes for a fast smoke run
  std::uint64_t seed = 20260101;
};

struct CheckResult {
  std::string key;
  int criterion = 0;
  std::string title;
  bool passed = false;
  bool expected_failure = false;
  std::string detail;
  std::vector<std::pair<std::string, double>> measurements;
  double seconds = 0.0;  // wall clock, kept out of serialized reports
};

struct CheckInfo {
  std::string key;
  int criterion = 0;
  std::string title;
  bool expected_failure = false;
  std::function<CheckResult(const BatteryOptions&)> run;
};

const std::vector<CheckInfo>& all_checks();
// Throws std::out_of_range for unknown keys.
const CheckInfo& find_check(const std::string& key);

// Runs one check; exceptions become failures with the message as detail.
CheckResult run_check(const CheckInfo& info, const BatteryOptions& opt);

// Machine-readable summary. Expected failures do not count against all_passed.
std::string to_json(const std::vector<CheckResult>& results, const BatteryOptions& opt);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace dnls::checks
