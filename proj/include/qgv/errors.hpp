#pragma once

#include <stdexcept>
#include <string>

namespace qgv {

// Violated precondition or malformed input (CLI exit code 1).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured cap (CLI exit code 2).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters rejected before any work, e.g. by the symplectic Singleton bound (exit code 2).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed form that must be integral was not, or an oracle/formula mismatch.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qgv
