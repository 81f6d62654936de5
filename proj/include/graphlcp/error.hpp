#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphlcp {

// Bad user input: malformed files, violated preconditions on graphs, stale or
// corrupted index documents. The CLI maps this to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A broken internal invariant. Never a valid outcome; the CLI maps this to
// exit status 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace graphlcp
