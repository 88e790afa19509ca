#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lahbell/rational.hpp"

namespace lahbell {

/// X is the ordinary variable; Y is y = x / (1 + lambda x), the variable in
/// which the degenerate families are polynomial.
enum class Variable { kX, kY };

/// Dense univariate polynomial with exact coefficients; coefficient i
/// multiplies variable^i. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  explicit RationalPolynomial(Variable variable = Variable::kX) : variable_(variable) {}
  explicit RationalPolynomial(std::vector<ExactRational> coefficients,
                              Variable variable = Variable::kX);

  static RationalPolynomial monomial(const ExactRational& coefficient, std::size_t degree,
                                     Variable variable = Variable::kX);

  Variable variable() const { return variable_; }
  const std::vector<ExactRational>& coefficients() const { return coefficients_; }
  /// Zero beyond the degree.
  ExactRational coefficient(std::size_t power) const;
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  /// Horner evaluation in the polynomial's own variable.
  ExactRational operator()(const ExactRational& at) const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const ExactRational& scale);

  friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs += rhs;
  }
  friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend RationalPolynomial operator*(RationalPolynomial lhs, const ExactRational& scale) {
    return lhs *= scale;
  }
  friend RationalPolynomial operator*(const ExactRational& scale, RationalPolynomial rhs) {
    return rhs *= scale;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// "[c0,c1,...]" with canonical rational strings.
  std::string to_string() const;

 private:
  void trim();
  void require_same_variable(const RationalPolynomial& other) const;

  std::vector<ExactRational> coefficients_;
  Variable variable_;
};

/// Evaluates a Y-tagged polynomial at x by substituting y = x / (1 + lambda x).
/// Throws EvaluationError when 1 + lambda x = 0 and std::invalid_argument for
/// X-tagged input.
ExactRational evaluate_substituted(const RationalPolynomial& polynomial, const ExactRational& x,
                                   const ExactRational& lambda);

/// y = x / (1 + lambda x). Throws EvaluationError when 1 + lambda x = 0.
ExactRational substituted_variable(const ExactRational& x, const ExactRational& lambda);

}  // namespace lahbell
