#pragma once

#include <stdexcept>
#include <string>

namespace pbr {

// User- or data-caused failure. The CLI maps these to exit code 1; anything
// else escaping to main is treated as an internal error (exit code 2).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct LookupError : Error {
  using Error::Error;
};

// Unlabelable blanks, single-class corpora, degenerate masks.
struct DataError : Error {
  using Error::Error;
};

// Metric undefined for the given counts (e.g. a class is absent).
struct MetricError : Error {
  using Error::Error;
};

// Non-finite value where a finite one is required.
struct EvalError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

}  // namespace pbr
