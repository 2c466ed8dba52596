#pragma once

#include <stdexcept>
#include <string>

namespace oclat {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (m < 2 for a partition enumerator, a letter outside a permutation's range).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size cap (carrier, degree, order, length) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold; the message names the hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration, such as an unknown suite name.
class UsageError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace oclat
