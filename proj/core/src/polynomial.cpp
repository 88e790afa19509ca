#include "lahbell/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "lahbell/errors.hpp"

namespace lahbell {

RationalPolynomial::RationalPolynomial(std::vector<ExactRational> coefficients, Variable variable)
    : coefficients_(std::move(coefficients)), variable_(variable) {
  trim();
}

RationalPolynomial RationalPolynomial::monomial(const ExactRational& coefficient,
                                                std::size_t degree, Variable variable) {
  std::vector<ExactRational> coefficients(degree + 1);
  coefficients[degree] = coefficient;
  return RationalPolynomial(std::move(coefficients), variable);
}

ExactRational RationalPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : ExactRational(0);
}

ExactRational RationalPolynomial::operator()(const ExactRational& at) const {
  ExactRational result(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result *= at;
    result += *it;
  }
  return result;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  require_same_variable(rhs);
  if (coefficients_.size() < rhs.coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  require_same_variable(rhs);
  if (coefficients_.size() < rhs.coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const ExactRational& scale) {
  for (auto& c : coefficients_) c *= scale;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
  lhs.require_same_variable(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return RationalPolynomial(lhs.variable_);
  std::vector<ExactRational> product(lhs.coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      product[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return RationalPolynomial(std::move(product), lhs.variable_);
}

std::string RationalPolynomial::to_string() const {
  if (coefficients_.empty()) return "[0]";
  std::string text = "[";
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i > 0) text += ',';
    text += coefficients_[i].to_string();
  }
  return text + "]";
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

void RationalPolynomial::require_same_variable(const RationalPolynomial& other) const {
  if (variable_ != other.variable_) {
    throw std::invalid_argument("polynomials in different variables cannot be combined");
  }
}

ExactRational substituted_variable(const ExactRational& x, const ExactRational& lambda) {
  const ExactRational denominator = ExactRational(1) + lambda * x;
  if (denominator.is_zero()) {
    throw EvaluationError("substitution y = x/(1+lambda*x) undefined at x = " + x.to_string() +
                          ", lambda = " + lambda.to_string());
  }
  return x / denominator;
}

ExactRational evaluate_substituted(const RationalPolynomial& polynomial, const ExactRational& x,
                                   const ExactRational& lambda) {
  if (polynomial.variable() != Variable::kY) {
    throw std::invalid_argument("substituted evaluation needs a polynomial in y");
  }
  return polynomial(substituted_variable(x, lambda));
}

}  // namespace lahbell
