#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netmix {

/// Malformed text input. `line` is 1-based; 0 means the input as a whole.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::int64_t line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  std::int64_t line() const noexcept { return line_; }

 private:
  std::int64_t line_;
};

/// Raised by operations that require a connected graph.
class disconnected_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netmix
