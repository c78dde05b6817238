#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A map, multigraph or arrow set that violates its structural invariants.
class InvalidMap : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain (non-plane input, unknown edge, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed ".rg" input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ribbon
