#include "lahbell/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "lahbell/errors.hpp"

namespace lahbell {

namespace {

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const BigInt& value) { return value.get_str(); }

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num_text) || !is_digits(den_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  const BigInt den(std::string(den_text), 10);
  if (negative) num = -num;
  return ExactRational(num, den);
}

ExactRational ExactRational::abs() const { return ExactRational(mpq_class(::abs(value_))); }

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return ExactRational(value_.get_den(), value_.get_num());
}

ExactRational ExactRational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  return ExactRational(mpq_class(num, den));
}

long double ExactRational::to_long_double() const {
  const double head = value_.get_d();
  const mpq_class residual = value_ - mpq_class(head);
  return static_cast<long double>(head) + static_cast<long double>(residual.get_d());
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
  return os << value.to_string();
}

}  // namespace lahbell
