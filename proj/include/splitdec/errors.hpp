#pragma once

#include <stdexcept>
#include <string>

namespace splitdec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input. line is 1-based, 0 when not tied to a file line.
struct ParseError : Error {
  ParseError(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line(line) {}
  int line;
};

// Parameters outside a constructor's domain, reducible moduli, bad actions.
struct ValidationError : Error {
  using Error::Error;
};

// An operation was called on inputs that violate its precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// Element, subgroup or recognition caps exceeded.
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace splitdec
