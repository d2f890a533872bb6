#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sphcurve {

// Base for every error the library raises. Callers that only care about
// "input was bad" vs "an invariant broke" can catch InputError / InvariantError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class MalformedWord : public InputError {
 public:
  using InputError::InputError;
};

class UnknownLabel : public InputError {
 public:
  using InputError::InputError;
};

class InvalidPosition : public InputError {
 public:
  using InputError::InputError;
};

// I at the only crossing of a 1-crossing curve would leave a crossing-free curve.
class DegenerateResult : public InputError {
 public:
  using InputError::InputError;
};

class NotRealizable : public InputError {
 public:
  using InputError::InputError;
};

class NotReduced : public InputError {
 public:
  using InputError::InputError;
};

class PatternMismatch : public InputError {
 public:
  using InputError::InputError;
};

// Parse failure with the 0-based character offset where it happened.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// No reducible word within four I-moves. Either a bug or a counterexample
// to the four-move bound; never reported as a reductivity of 5.
class BoundViolation : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace sphcurve
