#pragma once

#include "lahbell/rational.hpp"

namespace lahbell {

/// (x)_n = x(x-1)...(x-n+1); (x)_0 = 1.
ExactRational falling_factorial(const ExactRational& x, unsigned n);

/// <x>_n = x(x+1)...(x+n-1); <x>_0 = 1.
ExactRational rising_factorial(const ExactRational& x, unsigned n);

/// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda); (x)_{0,lambda} = 1.
/// lambda = 0 gives x^n and lambda = 1 gives the falling factorial.
ExactRational degenerate_falling_factorial(const ExactRational& x, unsigned n,
                                           const ExactRational& lambda);

BigInt factorial(unsigned n);

/// C(n, k), zero when k > n.
BigInt binomial_coefficient(unsigned n, unsigned k);

}  // namespace lahbell
