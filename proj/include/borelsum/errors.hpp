#pragma once

#include <stdexcept>
#include <string>

namespace borelsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the region where an operation is defined (Re z <= B, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Gamma evaluated at a nonpositive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Index past the stored coefficients or past a table bound.
class IndexError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Malformed text input: numbers, series files, command-line values.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace borelsum
