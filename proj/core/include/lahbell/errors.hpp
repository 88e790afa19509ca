#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lahbell {

// Argument outside the mathematical domain of a formula, e.g. 1 + lambda*t <= 0
// for the degenerate exponential or division by an exact zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Substituting y = x / (1 + lambda*x) with 1 + lambda*x = 0.
class EvaluationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Too few values supplied to a basis transform.
class LengthError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A truncated infinite sum did not settle within its term budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sampling requested from a parameterisation with a negative mass.
class SignedMassError : public std::runtime_error {
 public:
  SignedMassError(std::size_t first_negative_index, const std::string& mass)
      : std::runtime_error("mass at index " + std::to_string(first_negative_index) +
                           " is negative (" + mass + "); sampling requires a nonnegative measure"),
        index_(first_negative_index) {}

  std::size_t first_negative_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// The cumulative table of an infinite-support distribution could not reach
// the required coverage within the term budget.
class TailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownIdentityError : public std::invalid_argument {
 public:
  explicit UnknownIdentityError(const std::string& tag)
      : std::invalid_argument("unknown identity tag: " + tag) {}
};

}  // namespace lahbell
