#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dnls {

// Parameter grid mapped to scalar results. Each row holds the parameter
// values followed by the measured values, in the order of the name lists.
struct ScanReport {
  struct Row {
    std::vector<double> params;
    std::vector<double> values;
  };

  std::string name;
  std::vector<std::string> parameter_names;
  std::vector<std::string> value_names;
  std::vector<Row> rows;
  std::map<std::string, double> summary;
  std::map<std::string, std::string> notes;
  std::optional<std::uint64_t> seed;
  // Bounded maxima over random samples cannot prove an inequality.
  bool evidence = false;

  // Column index of a value name; throws if absent.
  std::size_t value_index(const std::string& value_name) const;
  std::vector<double> column(const std::string& value_name) const;
  // Max of a value column and the row where it is attained.
  std::pair<double, std::size_t> max_of(const std::string& value_name) const;
};

// JSON object with name, seed, caveat, summary, notes, columns and rows.
std::string to_json(const ScanReport& report);
// Header line of parameter and value names, then one row per line.
std::string to_csv(const ScanReport& report);

// Shortest round-trip decimal representation, used by all writers.
std::string format_double(double v);

}  // namespace dnls
