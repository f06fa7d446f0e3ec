#include <iostream>
#include <memory>

#include "commands.hpp"
#include "dnls/error.hpp"
#include "dnls/version.hpp"
#include "json_config.hpp"

int main(int argc, char** argv) {
  using namespace dnls::lab;
  CLI::App app{"Spectral experiments for the derivative NLS on the torus", "dnls-lab"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON configuration file");
  app.set_version_flag("--version", dnls::kVersion);

  Context ctx;
  std::string out_dir = ".";
  app.add_option("--out-dir,-o", out_dir, "Directory for report files")
      ->envname("DNLS_LAB_OUTPUT_DIR")
      ->capture_default_str();
  app.add_option("--seed", ctx.seed, "Seed for every random draw")->capture_default_str();
  app.add_flag("--quiet,-q", ctx.quiet, "Do not echo the report to stdout");

  const auto commands = register_commands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalidConfig;
  }
  ctx.out_dir = out_dir;

  for (const auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    try {
      return cmd.run(ctx);
    } catch (const dnls::InvalidArgument& e) {
      std::cerr << "dnls-lab " << cmd.app->get_name() << ": invalid configuration: " << e.what() << "\n";
      return kInvalidConfig;
    } catch (const std::exception& e) {
      std::cerr << "dnls-lab " << cmd.app->get_name() << ": " << e.what() << "\n";
      return kInvalidConfig;
    }
  }
  return kInvalidConfig;
}
