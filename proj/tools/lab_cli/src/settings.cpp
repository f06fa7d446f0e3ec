#include "settings.hpp"

#include <fstream>
#include <iostream>

#include "dnls/error.hpp"
#include "dnls/version.hpp"

namespace dnls::lab {

CLI::Option* Settings::flag(const std::string& flags, bool& value, const std::string& help) {
  auto* opt = app_->add_flag(flags, value, help);
  remember(opt, [&value] { return Json(value); });
  return opt;
}

void Settings::remember(CLI::Option* opt, std::function<Json()> read) {
  entries_.emplace_back(opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front(),
                        std::move(read));
}

Json Settings::to_json() const {
  Json j = Json::object();
  for (const auto& [name, read] : entries_) j[name] = read();
  return j;
}

Json envelope(const std::string& command, const Settings& settings, const Context& ctx, Json report) {
  Json j;
  j["tool"] = "dnls-lab";
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = ctx.seed;
  j["config"] = settings.to_json();
  j["report"] = std::move(report);
  return j;
}

Json parse(const std::string& text) { return Json::parse(text); }

std::filesystem::path write_output(const Context& ctx, const std::string& name, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(ctx.out_dir, ec);
  const auto path = ctx.out_dir / name;
  std::ofstream os(path, std::ios::binary);
  require(static_cast<bool>(os), "cannot write " + path.string());
  os << text;
  require(static_cast<bool>(os), "failed writing " + path.string());
  return path;
}

void emit(const Context& ctx, const std::string& prefix, const Json& env) {
  const std::string text = env.dump(2) + "\n";
  write_output(ctx, prefix + ".json", text);
  if (!ctx.quiet) std::cout << text;
}

}  // namespace dnls::lab
