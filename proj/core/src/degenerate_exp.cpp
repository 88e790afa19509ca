#include "lahbell/degenerate_exp.hpp"

#include <cmath>

#include "lahbell/errors.hpp"

namespace lahbell {

namespace {

ExactRational checked_base(const ExactRational& t, const ExactRational& lambda) {
  ExactRational base = ExactRational(1) + lambda * t;
  if (base.sign() <= 0) {
    throw DomainError("degenerate exponential requires 1 + lambda*t > 0, got " + base.to_string());
  }
  return base;
}

}  // namespace

double degenerate_exp_eval(const ExactRational& x, const ExactRational& t,
                           const ExactRational& lambda) {
  if (lambda.is_zero()) return std::exp((x * t).to_double());
  const ExactRational base = checked_base(t, lambda);
  if (x.is_zero()) return 1.0;
  // log1p keeps precision when lambda*t is tiny (the classical limit).
  const long double log_base = std::log1p((lambda * t).to_long_double());
  return static_cast<double>(std::exp((x / lambda).to_long_double() * log_base));
}

std::optional<ExactRational> degenerate_exp_exact(const ExactRational& x, const ExactRational& t,
                                                  const ExactRational& lambda) {
  if (lambda.is_zero()) {
    if ((x * t).is_zero()) return ExactRational(1);
    return std::nullopt;
  }
  const ExactRational base = checked_base(t, lambda);
  const ExactRational exponent = x / lambda;
  if (!exponent.is_integer() || !exponent.numerator().fits_slong_p()) return std::nullopt;
  return base.pow(exponent.numerator().get_si());
}

}  // namespace lahbell
