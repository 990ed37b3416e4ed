#pragma once

// Exception types raised by the library. Every error derives from
// lucas::Error so callers (the CLI in particular) can catch one type.

#include <stdexcept>
#include <string>

namespace lucas {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// arith
class InexactDivision : public Error {
 public:
  using Error::Error;
};
class DivisionByZeroPoly : public Error {
 public:
  using Error::Error;
};
class InvalidRational : public Error {
 public:
  using Error::Error;
};

// sequences
class BackwardUndefined : public Error {
 public:
  using Error::Error;
};
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

// binom
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};
class NonIntegralValue : public Error {
 public:
  using Error::Error;
};

// recurrence
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};
class InsufficientWindow : public Error {
 public:
  using Error::Error;
};
class HeterogeneousParams : public Error {
 public:
  using Error::Error;
};

// prover
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Grammar violation. `position` is a 0-based byte offset into the input.
class SyntaxError : public ParseError {
 public:
  SyntaxError(std::size_t position, std::string expected, std::string found)
      : ParseError("syntax error at position " + std::to_string(position) +
                   ": expected " + expected + ", found " + found),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownSequence : public ParseError {
 public:
  using ParseError::ParseError;
};
class NonAffineIndex : public ParseError {
 public:
  using ParseError::ParseError;
};
class UnsupportedExponent : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Raised when a constructed annihilator fails to annihilate the difference
/// stream of an identity. Indicates an unsound degree assignment.
class UnsoundAnnihilator : public Error {
 public:
  using Error::Error;
};

}  // namespace lucas
