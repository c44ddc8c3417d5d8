#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainmod {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A constraint on one entry of a vector failed; `index` is 1-based.
class ValidationError : public InvalidInput {
 public:
  ValidationError(std::size_t index, const std::string& what)
      : InvalidInput(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A mathematically negative outcome (empty interval, no generic weight).
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// Raised by routines that are only defined for χ ≠ 0.
class Degenerate : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace chainmod
