#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ahyp {

/// Raised when an internal consistency check fails. Never expected in
/// correct operation; the CLI maps it to exit status 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Syntax error in textual input, carrying the 0-based offset of the
/// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ahyp
