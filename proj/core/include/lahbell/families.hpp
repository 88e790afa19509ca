#pragma once

#include <span>
#include <string>
#include <vector>

#include "lahbell/errors.hpp"
#include "lahbell/polynomial.hpp"
#include "lahbell/rational.hpp"
#include "lahbell/triangles.hpp"

namespace lahbell {

/// B_n(x) = sum_k S2(n,k) x^k.
RationalPolynomial bell_polynomial(unsigned n);

/// B_n^L(x) = sum_k L(n,k) x^k.
RationalPolynomial lah_bell_polynomial(unsigned n);

/// B_n^L = B_n^L(1), the number of partitions of an n-set into nonempty
/// ordered lists.
BigInt lah_bell_number(unsigned n);

/// Degenerate Bell polynomial as a polynomial in y = x/(1+lambda x):
/// sum_k (1)_{k,lambda} S2(n,k) y^k.
RationalPolynomial degenerate_bell_polynomial(unsigned n, const ExactRational& lambda);

/// Degenerate Lah-Bell polynomial in y, built from the double-Stirling
/// coefficients: sum_l c(n,l) (1)_{l,lambda} y^l with
/// c(n,l) = sum_k |S1(n,k)| S2(k,l).
RationalPolynomial degenerate_lah_bell_polynomial(unsigned n, const ExactRational& lambda);

/// The same polynomial assembled as sum_k |S1(n,k)| B_{k,lambda}. Must agree
/// with degenerate_lah_bell_polynomial coefficient by coefficient.
RationalPolynomial degenerate_lah_bell_polynomial_via_bell(unsigned n, const ExactRational& lambda);

/// sum_{k=l}^{n} (-1)^(n-k) S1(n,k) S2(k,l).
BigInt double_stirling_coefficient(unsigned n, unsigned l);

/// sum_k (-1)^(n-k) S1(n,k) values[k]. Maps Bell values to Lah-Bell values
/// and degenerate Bell values to degenerate Lah-Bell values.
template <typename T>
T unsigned_stirling1_transform(unsigned n, std::span<const T> values);

/// sum_k (-1)^(n-k) S2(n,k) values[k]; inverse of unsigned_stirling1_transform.
template <typename T>
T alternating_stirling2_transform(unsigned n, std::span<const T> values);

/// B_n^L(alpha) from bell_values[k] = B_k(alpha), k = 0..n.
ExactRational lahbell_from_bell(unsigned n, std::span<const ExactRational> bell_values);

/// B_{n,lambda}(x) from lahbell_values[k] = B_{k,lambda}^L(x), k = 0..n.
ExactRational bell_from_lahbell_degenerate(unsigned n, std::span<const ExactRational> lahbell_values);

/// [B_0^L(x), ..., B_order^L(x)] from the exponential generating function
/// exp(x (1/(1-t) - 1)) expanded as an exact truncated power series. Does not
/// touch the number triangles.
std::vector<ExactRational> lah_bell_series_coefficients(const ExactRational& x, unsigned order);

namespace detail {

inline void require_length(unsigned n, std::size_t size) {
  if (size < static_cast<std::size_t>(n) + 1) {
    throw LengthError("transform of order " + std::to_string(n) + " needs " +
                      std::to_string(n + 1) + " values, got " + std::to_string(size));
  }
}

template <typename T, typename Weight>
T weighted_sum(unsigned n, std::span<const T> values, Weight weight) {
  require_length(n, values.size());
  T sum = ExactRational(weight(n, 0)) * values[0];
  for (unsigned k = 1; k <= n; ++k) sum = sum + ExactRational(weight(n, k)) * values[k];
  return sum;
}

}  // namespace detail

template <typename T>
T unsigned_stirling1_transform(unsigned n, std::span<const T> values) {
  return detail::weighted_sum(n, values,
                              [](unsigned row, unsigned k) { return stirling1_unsigned(row, k); });
}

template <typename T>
T alternating_stirling2_transform(unsigned n, std::span<const T> values) {
  return detail::weighted_sum(n, values, [](unsigned row, unsigned k) {
    const BigInt s = stirling2(row, k);
    return (row - k) % 2 == 0 ? s : BigInt(-s);
  });
}

}  // namespace lahbell
