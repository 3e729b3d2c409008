#pragma once

#include <stdexcept>
#include <string>

namespace liftcount {

struct LiftError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: syntax, undeclared symbols, arity mismatches, invalid
// weights or flags.
struct ValidationError : LiftError {
  using LiftError::LiftError;
};

struct ParseError : ValidationError {
  ParseError(const std::string& what, unsigned line, unsigned column)
      : ValidationError(what + " (line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ")"),
        line(line),
        column(column) {}
  unsigned line;
  unsigned column;
};

// The requested method cannot handle the formula (e.g. not FO2, CQ rules
// stall without a separator).
struct ScopeError : LiftError {
  using LiftError::LiftError;
};

// A configured resource cap was exceeded. Never a silent approximation.
struct ResourceCapError : LiftError {
  using LiftError::LiftError;
};

// The hard constraints of an MLN admit no world of nonzero weight.
struct InconsistentMlnError : LiftError {
  using LiftError::LiftError;
};

}  // namespace liftcount
