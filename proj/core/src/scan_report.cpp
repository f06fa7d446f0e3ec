#include "dnls/scan_report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "dnls/error.hpp"

namespace dnls {

std::size_t ScanReport::value_index(const std::string& value_name) const {
  const auto it = std::find(value_names.begin(), value_names.end(), value_name);
  require(it != value_names.end(), "scan report has no column '" + value_name + "'");
  return static_cast<std::size_t>(it - value_names.begin());
}

std::vector<double> ScanReport::column(const std::string& value_name) const {
  const auto idx = value_index(value_name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.values[idx]);
  return out;
}

std::pair<double, std::size_t> ScanReport::max_of(const std::string& value_name) const {
  const auto idx = value_index(value_name);
  require(!rows.empty(), "scan report is empty");
  double best = rows.front().values[idx];
  std::size_t arg = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].values[idx] > best) {
      best = rows[i].values[idx];
      arg = i;
    }
  return {best, arg};
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  // integral values print without an exponent
  const auto res = std::abs(v) < 1e15 && v == std::trunc(v)
                       ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed)
                       : std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

std::string to_json(const ScanReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["seed"] = report.seed ? nlohmann::ordered_json(*report.seed) : nlohmann::ordered_json(nullptr);
  j["caveat"] = report.evidence ? "EVIDENCE: a bounded maximum over samples does not prove the inequality"
                                : "";
  j["parameters"] = report.parameter_names;
  j["values"] = report.value_names;
  auto& summary = j["summary"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.summary) summary[k] = number(v);
  auto& notes = j["notes"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.notes) notes[k] = v;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    auto r = nlohmann::ordered_json::array();
    for (double v : row.params) r.push_back(number(v));
    for (double v : row.values) r.push_back(number(v));
    rows.push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const ScanReport& report) {
  std::ostringstream os;
  bool first = true;
  for (const auto& n : report.parameter_names) {
    os << (first ? "" : ",") << n;
    first = false;
  }
  for (const auto& n : report.value_names) {
    os << (first ? "" : ",") << n;
    first = false;
  }
  os << '\n';
  for (const auto& row : report.rows) {
    first = true;
    for (double v : row.params) {
      os << (first ? "" : ",") << format_double(v);
      first = false;
    }
    for (double v : row.values) {
      os << (first ? "" : ",") << format_double(v);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace dnls
