#pragma once

#include <stdexcept>
#include <string>

namespace otbook {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter outside the range an operation is defined on (h, k < 1, x <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Unknown curve, arc, boundary or vertex name.
class LookupError : public Error {
 public:
  using Error::Error;
};

// A 64-bit intermediate did not fit. Results are never silently truncated.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Kirby move whose preconditions do not hold.
class IllegalMove : public Error {
 public:
  using Error::Error;
};

class UnsupportedCoefficient : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed. Always a bug or a corrupted input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class NotAChain : public Error {
 public:
  using Error::Error;
};

class InvalidCertificate : public Error {
 public:
  using Error::Error;
};

}  // namespace otbook
