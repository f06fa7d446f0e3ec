#pragma once

#include <stdexcept>
#include <string>

namespace dnls {

// Thrown when an operation's preconditions are violated (bad cutoff, grid
// too small, parameter out of range). Message is meant for end users.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace dnls
