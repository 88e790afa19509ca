#include "lahbell/factorials.hpp"

namespace lahbell {

ExactRational falling_factorial(const ExactRational& x, unsigned n) {
  return degenerate_falling_factorial(x, n, ExactRational(1));
}

ExactRational rising_factorial(const ExactRational& x, unsigned n) {
  return degenerate_falling_factorial(x, n, ExactRational(-1));
}

ExactRational degenerate_falling_factorial(const ExactRational& x, unsigned n,
                                           const ExactRational& lambda) {
  ExactRational product(1);
  ExactRational factor = x;
  for (unsigned j = 0; j < n; ++j) {
    product *= factor;
    if (product.is_zero()) break;
    factor -= lambda;
  }
  return product;
}

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial_coefficient(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace lahbell
