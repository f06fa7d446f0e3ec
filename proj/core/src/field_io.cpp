#include "dnls/field_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "dnls/error.hpp"
#include "dnls/scan_report.hpp"

namespace dnls::io {

namespace {

nlohmann::ordered_json read_header(std::istream& is, const std::string& kind) {
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), "field file is empty");
  nlohmann::ordered_json h;
  try {
    h = nlohmann::ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("field file header is not valid JSON: ") + e.what());
  }
  require(h.value("kind", "") == kind, "expected a " + kind + " file, got '" + h.value("kind", "") + "'");
  return h;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    require(pos == s.size(), "bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad number '" + s + "' in field file");
  }
}

int parse_int(const std::string& s) {
  const double v = parse_double(s);
  require(v == static_cast<int>(v), "expected an integer, got '" + s + "'");
  return static_cast<int>(v);
}

void write_row(std::ostream& os, Complex c) {
  os << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
}

}  // namespace

void write_field(std::ostream& os, const SpectralField& f) {
  nlohmann::ordered_json h;
  h["kind"] = "field";
  h["cutoff"] = f.cutoff();
  os << h.dump() << "\nxi,re,im\n";
  for (int xi = -f.cutoff(); xi <= f.cutoff(); ++xi) {
    os << xi << ',';
    write_row(os, f[xi]);
  }
}

SpectralField read_field(std::istream& is) {
  const auto h = read_header(is, "field");
  const int n = h.at("cutoff").get<int>();
  SpectralField f(n);
  std::string line;
  std::getline(is, line);
  require(line == "xi,re,im", "field file: expected column header 'xi,re,im'");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    require(cells.size() == 3, "field file: bad row '" + line + "'");
    f.at(parse_int(cells[0])) = {parse_double(cells[1]), parse_double(cells[2])};
  }
  return f;
}

void write_trajectory(std::ostream& os, const Trajectory& traj) {
  nlohmann::ordered_json h;
  h["kind"] = "trajectory";
  h["cutoff"] = traj.cutoff();
  h["half_width"] = traj.half_width();
  h["steps"] = traj.steps();
  h["profile"] = {{"kind", traj.profile().kind == CutoffProfile::Kind::kBump ? "bump" : "none"},
                  {"scale", traj.profile().scale}};
  os << h.dump() << "\nk,xi,re,im\n";
  const int n = traj.cutoff();
  for (int k = 0; k <= traj.steps(); ++k)
    for (int xi = -n; xi <= n; ++xi) {
      os << k << ',' << xi << ',';
      write_row(os, traj[k][xi]);
    }
}

Trajectory read_trajectory(std::istream& is) {
  const auto h = read_header(is, "trajectory");
  const int n = h.at("cutoff").get<int>();
  const int m = h.at("steps").get<int>();
  const double tw = h.at("half_width").get<double>();
  require(n >= 0 && m >= 1, "trajectory file: bad cutoff or step count");
  CutoffProfile profile;
  if (h.contains("profile")) {
    const auto& p = h["profile"];
    const auto kind = p.value("kind", "none");
    require(kind == "none" || kind == "bump", "trajectory file: unknown profile '" + kind + "'");
    if (kind == "bump") profile = CutoffProfile::bump(p.value("scale", 1.0));
  }
  std::vector<SpectralField> samples(m + 1, SpectralField(n));
  std::string line;
  std::getline(is, line);
  require(line == "k,xi,re,im", "trajectory file: expected column header 'k,xi,re,im'");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    require(cells.size() == 4, "trajectory file: bad row '" + line + "'");
    const int k = parse_int(cells[0]);
    require(k >= 0 && k <= m, "trajectory file: sample index out of range");
    samples[k].at(parse_int(cells[1])) = {parse_double(cells[2]), parse_double(cells[3])};
  }
  return Trajectory(tw, std::move(samples), profile);
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  require(is.good(), "cannot open '" + path + "'");
  return is;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  require(os.good(), "cannot write '" + path + "'");
  return os;
}

}  // namespace

void save_field(const std::string& path, const SpectralField& f) {
  auto os = open_out(path);
  write_field(os, f);
}

SpectralField load_field(const std::string& path) {
  auto is = open_in(path);
  return read_field(is);
}

void save_trajectory(const std::string& path, const Trajectory& traj) {
  auto os = open_out(path);
  write_trajectory(os, traj);
}

Trajectory load_trajectory(const std::string& path) {
  auto is = open_in(path);
  return read_trajectory(is);
}

std::string peek_kind(const std::string& path) {
  auto is = open_in(path);
  std::string line;
  std::getline(is, line);
  try {
    return nlohmann::json::parse(line).value("kind", "");
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument("'" + path + "' does not start with a JSON header line");
  }
}

}  // namespace dnls::io
