#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace dnls::lab {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInvalidConfig = 1, kVerifyFailure = 2, kNoConvergence = 3 };

// Options of one subcommand, registered with CLI11 and remembered in
// declaration order so reports can embed the effective configuration.
class Settings {
 public:
  explicit Settings(CLI::App* app) : app_(app) {}

  template <class T>
  CLI::Option* add(const std::string& flags, T& value, const std::string& help) {
    auto* opt = app_->add_option(flags, value, help)->capture_default_str();
    remember(opt, [&value] { return Json(value); });
    return opt;
  }

  CLI::Option* flag(const std::string& flags, bool& value, const std::string& help);

  CLI::App* app() const { return app_; }
  Json to_json() const;

 private:
  void remember(CLI::Option* opt, std::function<Json()> read);

  CLI::App* app_;
  std::vector<std::pair<std::string, std::function<Json()>>> entries_;
};

struct Context {
  std::filesystem::path out_dir;
  std::uint64_t seed = 1;
  bool quiet = false;
};

// Report envelope: tool, version, command, seed, config, then the payload.
Json envelope(const std::string& command, const Settings& settings, const Context& ctx, Json report);

// Parses a report string produced by the library writers, keeping key order.
Json parse(const std::string& text);

// Writes text to out_dir/name and returns the path.
std::filesystem::path write_output(const Context& ctx, const std::string& name, const std::string& text);

// Writes the envelope as <prefix>.json and echoes it to stdout.
void emit(const Context& ctx, const std::string& prefix, const Json& env);

}  // namespace dnls::lab
