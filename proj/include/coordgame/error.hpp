#pragma once

#include <stdexcept>
#include <string>

namespace coordgame {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument: unknown node id, parameter out of range, malformed spec.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The input lacks the graph structure an algorithm requires
// (not a color forest, not a pseudoforest, cycles sharing an edge, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A joint strategy assigns some node a color outside its color set.
class InfeasibleProfile : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed; carries the offending line (1-based, 0 if
// the problem is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace coordgame
