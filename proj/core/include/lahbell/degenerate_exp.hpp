#pragma once

#include <optional>

#include "lahbell/rational.hpp"

namespace lahbell {

/// e_lambda^x(t) = (1 + lambda t)^(x/lambda), and exp(x t) when lambda = 0.
/// Throws DomainError when lambda != 0 and 1 + lambda t <= 0.
double degenerate_exp_eval(const ExactRational& x, const ExactRational& t,
                           const ExactRational& lambda);

/// Exact value when the exponent x/lambda is an integer m: (1 + lambda t)^m.
/// With lambda = 0 the value is exact only when x t = 0. Returns nullopt
/// otherwise. Same domain check as degenerate_exp_eval.
std::optional<ExactRational> degenerate_exp_exact(const ExactRational& x, const ExactRational& t,
                                                  const ExactRational& lambda);

}  // namespace lahbell
