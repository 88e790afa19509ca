#include "lahbell/families.hpp"

#include "lahbell/factorials.hpp"

namespace lahbell {

namespace {

RationalPolynomial from_row(std::span<const BigInt> row) {
  std::vector<ExactRational> coefficients(row.begin(), row.end());
  return RationalPolynomial(std::move(coefficients), Variable::kX);
}

}  // namespace

RationalPolynomial bell_polynomial(unsigned n) { return from_row(stirling2_triangle().row(n)); }

RationalPolynomial lah_bell_polynomial(unsigned n) { return from_row(lah_triangle().row(n)); }

BigInt lah_bell_number(unsigned n) {
  BigInt sum = 0;
  for (const BigInt& entry : lah_triangle().row(n)) sum += entry;
  return sum;
}

RationalPolynomial degenerate_bell_polynomial(unsigned n, const ExactRational& lambda) {
  const auto row = stirling2_triangle().row(n);
  std::vector<ExactRational> coefficients(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    coefficients[k] = degenerate_falling_factorial(1, k, lambda) * ExactRational(row[k]);
  }
  return RationalPolynomial(std::move(coefficients), Variable::kY);
}

BigInt double_stirling_coefficient(unsigned n, unsigned l) {
  BigInt sum = 0;
  for (unsigned k = l; k <= n; ++k) sum += stirling1_unsigned(n, k) * stirling2(k, l);
  return sum;
}

RationalPolynomial degenerate_lah_bell_polynomial(unsigned n, const ExactRational& lambda) {
  std::vector<ExactRational> coefficients(n + 1);
  for (unsigned l = 0; l <= n; ++l) {
    coefficients[l] =
        ExactRational(double_stirling_coefficient(n, l)) * degenerate_falling_factorial(1, l, lambda);
  }
  return RationalPolynomial(std::move(coefficients), Variable::kY);
}

RationalPolynomial degenerate_lah_bell_polynomial_via_bell(unsigned n, const ExactRational& lambda) {
  std::vector<RationalPolynomial> bell;
  bell.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) bell.push_back(degenerate_bell_polynomial(k, lambda));
  return unsigned_stirling1_transform<RationalPolynomial>(n, bell);
}

ExactRational lahbell_from_bell(unsigned n, std::span<const ExactRational> bell_values) {
  return unsigned_stirling1_transform(n, bell_values);
}

ExactRational bell_from_lahbell_degenerate(unsigned n, std::span<const ExactRational> lahbell_values) {
  return alternating_stirling2_transform(n, lahbell_values);
}

std::vector<ExactRational> lah_bell_series_coefficients(const ExactRational& x, unsigned order) {
  // F = exp(H) with H(t) = x (t + t^2 + ...) satisfies F' = H' F, so
  // m f_m = sum_{k=1}^{m} k h_k f_{m-k} with every h_k = x.
  std::vector<ExactRational> f(order + 1);
  f[0] = 1;
  for (unsigned m = 1; m <= order; ++m) {
    ExactRational acc(0);
    for (unsigned k = 1; k <= m; ++k) acc += ExactRational(k) * f[m - k];
    f[m] = x * acc / ExactRational(m);
  }
  std::vector<ExactRational> scaled(order + 1);
  BigInt fact = 1;
  for (unsigned m = 0; m <= order; ++m) {
    if (m > 0) fact *= m;
    scaled[m] = f[m] * ExactRational(fact);
  }
  return scaled;
}

}  // namespace lahbell
