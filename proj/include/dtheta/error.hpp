#pragma once

#include <stdexcept>
#include <string>

namespace dtheta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function: poles, sector violations,
/// degree preconditions, empty ranges.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Structurally valid input that violates a semantic invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed its own self-check (non-finite value,
/// lost bracket, reality violation, non-integral coefficient).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Requested operation needs data the descriptor does not have
/// (e.g. analytic continuation of a coefficient-file field).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace dtheta
