#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lahbell {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Arbitrary-precision rational kept in canonical form: positive
/// denominator, numerator and denominator coprime.
///
/// Every operation is exact. Division by zero throws DomainError.
class ExactRational {
 public:
  ExactRational() = default;

  template <std::signed_integral T>
  ExactRational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  ExactRational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  ExactRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// numerator / denominator, reduced. Throws DomainError when denominator == 0.
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "a", "-a", "a/b" or "-a/b" (decimal digits only, b != 0).
  /// Throws std::invalid_argument on malformed text and DomainError on b == 0.
  static ExactRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  ExactRational abs() const;
  ExactRational reciprocal() const;
  /// Integer power; negative exponents invert (0 to a negative power throws).
  ExactRational pow(long exponent) const;

  double to_double() const { return value_.get_d(); }
  long double to_long_double() const;

  /// Canonical "a/b" with the denominator omitted when it is 1.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit ExactRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

}  // namespace lahbell
