#pragma once

#include <string>
#include <variant>

#include "lahbell/rational.hpp"

namespace lahbell {

/// Either an exact rational or a floating approximation. Quantities over a
/// finite support are exact; truncated infinite sums and irrational
/// normalisers produce approximations.
class Value {
 public:
  Value(ExactRational exact) : value_(std::move(exact)) {}  // NOLINT(google-explicit-constructor)
  Value(double approx) : value_(approx) {}                  // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<ExactRational>(value_); }
  /// Throws std::logic_error for approximations.
  const ExactRational& exact() const;
  double approx() const;

  /// Rational string when exact, shortest round-trip decimal otherwise.
  std::string to_string() const;

 private:
  std::variant<ExactRational, double> value_;
};

/// Shortest decimal text that reads back to the same double.
std::string format_decimal(double value);

}  // namespace lahbell
