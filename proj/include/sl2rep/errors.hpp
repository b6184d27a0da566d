#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sl2rep {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Text could not be parsed; `position` is a 1-based byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

struct InvalidInputError : Error {
  using Error::Error;
};

// Floating-point invariants degraded beyond tolerance (det drift, trace leakage, ...).
struct NumericError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  using Error::Error;
};

// Iterative continuation stalled; `step` is the 0-based step index that failed.
struct ContinuationError : Error {
  ContinuationError(const std::string& what, int step)
      : Error(what + " at step " + std::to_string(step)), step(step) {}
  int step;
};

struct BudgetError : Error {
  using Error::Error;
};

}  // namespace sl2rep
