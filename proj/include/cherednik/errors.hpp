#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

// Arithmetic outside the domain of an operation (inverting zero, mixing
// incompatible cyclotomic fields).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computed object failed an invariant that must hold if the construction is
// correct: inexact division, a relation space that is not closed, etc.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cherednik
