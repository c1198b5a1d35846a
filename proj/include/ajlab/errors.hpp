#pragma once

#include <stdexcept>
#include <string>

namespace ajlab {

/// Violated precondition of an algebraic operation (zero divisor, bad degree, mismatched context).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient or factor has a pole at the requested evaluation point.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Odd power of Qm where only Qm^2 = Q/q can be rewritten.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Query outside the support of a summand (zero by convention but rejected by the caller).
class SupportError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed polynomial / operator / JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failures.
class BranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : std::runtime_error(what), last_residual_(last_residual) {}
  double last_residual() const { return last_residual_; }

 private:
  double last_residual_;
};

class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ajlab
