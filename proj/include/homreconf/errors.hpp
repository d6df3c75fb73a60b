#pragma once

#include <stdexcept>
#include <string>

namespace homreconf {

// Malformed input text. line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An enumeration or size guard would be exceeded; callers may retry with a
// larger cap. Deliberately not derived from logic_error: hitting a cap is an
// expected runtime outcome, not a bug.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// phi/psi (or pins) fail their preconditions: not total, not homomorphisms,
// or not extensions of the pinning.
class InvalidEndpoints : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homreconf
