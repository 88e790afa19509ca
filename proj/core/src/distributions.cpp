#include "lahbell/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "lahbell/degenerate_exp.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/factorials.hpp"

namespace lahbell {

namespace {

void require_degeneracy(const ExactRational& lambda) {
  if (lambda.sign() < 0 || lambda >= ExactRational(1)) {
    throw DomainError("lambda must lie in [0,1), got " + lambda.to_string());
  }
}

// m when 1/lambda is a positive integer that fits an unsigned.
std::optional<unsigned> reciprocal_integer(const ExactRational& lambda) {
  if (lambda.is_zero() || lambda.numerator() != 1) return std::nullopt;
  const BigInt& m = lambda.denominator();
  if (!m.fits_uint_p()) return std::nullopt;
  return static_cast<unsigned>(m.get_ui());
}

}  // namespace

DegenerateBinomial::DegenerateBinomial(unsigned trials, ExactRational p, ExactRational lambda)
    : trials_(trials), p_(std::move(p)), lambda_(std::move(lambda)) {
  if (p_.sign() < 0 || p_ > ExactRational(1)) {
    throw DomainError("p must lie in [0,1], got " + p_.to_string());
  }
  require_degeneracy(lambda_);
  normalizer_ = degenerate_falling_factorial(1, trials_, lambda_);
  if (normalizer_.is_zero()) {
    throw DomainError("(1)_{n,lambda} vanishes for n = " + std::to_string(trials_) +
                      ", lambda = " + lambda_.to_string());
  }
}

DegeneratePoisson::DegeneratePoisson(ExactRational alpha, ExactRational lambda)
    : alpha_(std::move(alpha)), lambda_(std::move(lambda)), cutoff_(reciprocal_integer(lambda_)) {
  if (alpha_.sign() <= 0) throw DomainError("alpha must be positive, got " + alpha_.to_string());
  require_degeneracy(lambda_);
  if (!lambda_.is_zero() && !cutoff_ && lambda_ * alpha_ >= ExactRational(1)) {
    throw DomainError("lambda*alpha must be < 1 when 1/lambda is not an integer (lambda = " +
                      lambda_.to_string() + ", alpha = " + alpha_.to_string() + ")");
  }
}

std::string describe(const Distribution& distribution) {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, DegenerateBinomial>) {
          return "DegenerateBinomial(n=" + std::to_string(d.trials()) + ", p=" + d.p().to_string() +
                 ", lambda=" + d.lambda().to_string() + ")";
        } else {
          return "DegeneratePoisson(alpha=" + d.alpha().to_string() +
                 ", lambda=" + d.lambda().to_string() + ")";
        }
      },
      distribution);
}

ExactRational db_pmf(const DegenerateBinomial& d, unsigned i) {
  if (i > d.trials()) return 0;
  const ExactRational& lambda = d.lambda();
  return ExactRational(binomial_coefficient(d.trials(), i)) *
         degenerate_falling_factorial(d.p(), i, lambda) *
         degenerate_falling_factorial(ExactRational(1) - d.p(), d.trials() - i, lambda) /
         d.normalizer();
}

Value dp_pmf(const DegeneratePoisson& d, unsigned i) {
  const ExactRational weight = d.alpha().pow(i) * degenerate_falling_factorial(1, i, d.lambda()) /
                               ExactRational(factorial(i));
  if (weight.is_zero()) return ExactRational(0);
  if (const auto normalizer = degenerate_exp_exact(1, d.alpha(), d.lambda())) {
    return weight / *normalizer;
  }
  return weight.to_double() / degenerate_exp_eval(1, d.alpha(), d.lambda());
}

bool has_finite_support(const Distribution& distribution) {
  if (const auto* poisson = std::get_if<DegeneratePoisson>(&distribution)) {
    return poisson->finite_support();
  }
  return true;
}

std::vector<ExactRational> exact_masses(const Distribution& distribution) {
  std::vector<ExactRational> masses;
  if (const auto* binomial = std::get_if<DegenerateBinomial>(&distribution)) {
    for (unsigned i = 0; i <= binomial->trials(); ++i) masses.push_back(db_pmf(*binomial, i));
  } else {
    const auto& poisson = std::get<DegeneratePoisson>(distribution);
    if (!poisson.finite_support()) {
      throw std::invalid_argument("exact masses need a finite support: " + describe(distribution));
    }
    for (unsigned i = 0; i <= *poisson.support_cutoff(); ++i) {
      masses.push_back(dp_pmf(poisson, i).exact());
    }
  }
  while (masses.size() > 1 && masses.back().is_zero()) masses.pop_back();
  return masses;
}

SupportAnalysis analyze_support(const Distribution& distribution, unsigned horizon) {
  SupportAnalysis analysis;
  if (has_finite_support(distribution)) {
    const auto masses = exact_masses(distribution);
    analysis.finite = true;
    analysis.cutoff = static_cast<unsigned>(masses.size() - 1);
    for (unsigned i = 0; i < masses.size(); ++i) {
      if (masses[i].sign() >= 0) continue;
      if (analysis.all_nonnegative || i <= horizon) analysis.negative_indices.push_back(i);
      analysis.all_nonnegative = false;
    }
    return analysis;
  }

  // Infinite support: a degenerate Poisson law whose mass at i has the sign
  // of (1)_{i,lambda} = prod_{j<i} (1 - j lambda). Classical Poisson never
  // changes sign.
  const auto& poisson = std::get<DegeneratePoisson>(distribution);
  analysis.finite = false;
  if (poisson.classical()) return analysis;
  const ExactRational& lambda = poisson.lambda();
  int sign = 1;
  for (unsigned i = 1;; ++i) {
    // Factor (1 - (i-1) lambda) enters the product at index i.
    const ExactRational factor = ExactRational(1) - ExactRational(i - 1) * lambda;
    sign *= factor.sign();
    if (sign < 0) {
      analysis.all_nonnegative = false;
      analysis.negative_indices.push_back(i);
    }
    if (i >= horizon && !analysis.all_nonnegative) break;
  }
  return analysis;
}

}  // namespace lahbell
