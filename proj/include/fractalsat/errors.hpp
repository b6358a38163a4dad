#pragma once

#include <stdexcept>
#include <string>

namespace fractalsat {

// Bad input text (formula syntax, unbound variables, ...).
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// An operation was called outside its contract.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// A finished trace does not have the shape the decoder expects.
struct MalformedRun : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rule set fails validation (duplicate left-hand sides, speed clashes).
struct RuleSetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fractalsat
