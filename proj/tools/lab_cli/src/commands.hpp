#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "settings.hpp"

namespace dnls::lab {

struct Command {
  CLI::App* app = nullptr;
  std::shared_ptr<Settings> settings;
  std::function<int(const Context&)> run;
};

// Adds every subcommand to root.
std::vector<Command> register_commands(CLI::App& root);

}  // namespace dnls::lab
