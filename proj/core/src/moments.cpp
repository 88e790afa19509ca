#include "lahbell/moments.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "lahbell/errors.hpp"
#include "lahbell/factorials.hpp"
#include "lahbell/families.hpp"
#include "lahbell/polynomial.hpp"
#include "lahbell/triangles.hpp"

namespace lahbell {

namespace {

// Neumaier-compensated sum of f(i) z^i w_i over the degenerate Poisson
// weights w_i = alpha^i (1)_{i,lambda} / i!, times the normaliser.
long double truncated_poisson_sum(const DegeneratePoisson& d,
                                  const std::function<long double(unsigned)>& f, long double z,
                                  const SeriesOptions& options) {
  const long double alpha = d.alpha().to_long_double();
  const long double lambda = d.lambda().to_long_double();
  const long double tolerance = options.tolerance;
  long double weight = 1.0L;
  long double sum = 0.0L;
  long double compensation = 0.0L;
  long double abs_sum = 0.0L;
  unsigned quiet = 0;
  for (unsigned i = 0; i < options.term_budget; ++i) {
    const long double term = f(i) * weight;
    if (!std::isfinite(term)) {
      throw ConvergenceError("series term overflowed at index " + std::to_string(i));
    }
    const long double magnitude = std::fabs(term);
    quiet = magnitude < tolerance * abs_sum ? quiet + 1 : 0;
    const long double next = sum + term;
    compensation += std::fabs(sum) >= magnitude ? (sum - next) + term : (term - next) + sum;
    sum = next;
    abs_sum += magnitude;
    if (quiet >= options.patience) {
      const long double log_normalizer =
          d.classical() ? -alpha : -std::log1p(lambda * alpha) / lambda;
      return (sum + compensation) * std::exp(log_normalizer);
    }
    weight *= alpha * (1.0L - static_cast<long double>(i) * lambda) * z /
              static_cast<long double>(i + 1);
  }
  throw ConvergenceError("series for " + describe(Distribution(d)) + " did not settle within " +
                         std::to_string(options.term_budget) + " terms");
}

long double moment_function_long(MomentKind kind, unsigned order, unsigned x) {
  long double result = 1.0L;
  for (unsigned j = 0; j < order; ++j) {
    switch (kind) {
      case MomentKind::kRaw:
        result *= x;
        break;
      case MomentKind::kFalling:
        result *= static_cast<long double>(x) - j;
        break;
      case MomentKind::kRising:
        result *= static_cast<long double>(x) + j;
        break;
    }
  }
  return result;
}

ExactRational exact_expectation(const std::vector<ExactRational>& masses,
                                const std::function<ExactRational(unsigned)>& f) {
  ExactRational sum(0);
  for (unsigned i = 0; i < masses.size(); ++i) {
    if (!masses[i].is_zero()) sum += f(i) * masses[i];
  }
  return sum;
}

const DegeneratePoisson* infinite_poisson(const Distribution& distribution) {
  const auto* poisson = std::get_if<DegeneratePoisson>(&distribution);
  return poisson && !poisson->finite_support() ? poisson : nullptr;
}

}  // namespace

std::string to_string(MomentKind kind) {
  switch (kind) {
    case MomentKind::kRaw:
      return "raw";
    case MomentKind::kFalling:
      return "falling";
    case MomentKind::kRising:
      return "rising";
  }
  return "raw";
}

std::optional<MomentKind> parse_moment_kind(std::string_view text) {
  if (text == "raw") return MomentKind::kRaw;
  if (text == "falling") return MomentKind::kFalling;
  if (text == "rising") return MomentKind::kRising;
  return std::nullopt;
}

ExactRational moment_function(MomentKind kind, unsigned order, unsigned x) {
  switch (kind) {
    case MomentKind::kRaw:
      return ExactRational(x).pow(order);
    case MomentKind::kFalling:
      return falling_factorial(x, order);
    case MomentKind::kRising:
      return rising_factorial(x, order);
  }
  return 0;
}

double moment_function_approx(MomentKind kind, unsigned order, unsigned x) {
  return static_cast<double>(moment_function_long(kind, order, x));
}

ExactRational db_mean(const DegenerateBinomial& d) {
  const unsigned n = d.trials();
  if (n == 0) return 0;
  const ExactRational& lambda = d.lambda();
  return ExactRational(n) * d.p() *
         degenerate_falling_factorial(ExactRational(1) - lambda, n - 1, lambda) / d.normalizer();
}

ExactRational db_variance(const DegenerateBinomial& d) {
  const unsigned n = d.trials();
  if (n < 2) {
    const ExactRational mean = db_raw_moment(d, 1);
    return db_raw_moment(d, 2) - mean * mean;
  }
  const ExactRational& lambda = d.lambda();
  const ExactRational& p = d.p();
  const ExactRational one(1);
  const ExactRational bracket = ExactRational(n - 1) * p + one - ExactRational(n) * lambda -
                                db_mean(d) * (one - lambda);
  return ExactRational(n) * p / d.normalizer() *
         degenerate_falling_factorial(one - ExactRational(2) * lambda, n - 2, lambda) * bracket;
}

ExactRational db_raw_moment(const DegenerateBinomial& d, unsigned m) {
  const ExactRational& lambda = d.lambda();
  const ExactRational q = ExactRational(1) - d.p();
  ExactRational sum(0);
  for (unsigned i = 0; i <= d.trials(); ++i) {
    const ExactRational power = ExactRational(i).pow(m);  // 0^0 = 1
    if (power.is_zero()) continue;
    sum += ExactRational(binomial_coefficient(d.trials(), i)) * power *
           degenerate_falling_factorial(d.p(), i, lambda) *
           degenerate_falling_factorial(q, d.trials() - i, lambda);
  }
  return sum / d.normalizer();
}

double db_mgf_eval(const DegenerateBinomial& d, double t) {
  long double sum = 0.0L;
  for (unsigned i = 0; i <= d.trials(); ++i) {
    sum += db_pmf(d, i).to_long_double() * std::exp(static_cast<long double>(i) * t);
  }
  return static_cast<double>(sum);
}

std::pair<ExactRational, ExactRational> dp_mean_variance(const DegeneratePoisson& d) {
  const ExactRational scale = ExactRational(1) + d.alpha() * d.lambda();
  const ExactRational mean = d.alpha() / scale;
  return {mean, mean / scale};
}

Value direct_moment(const Distribution& distribution, MomentKind kind, unsigned m,
                    const SeriesOptions& options) {
  if (m == 0) return ExactRational(1);
  if (const auto* poisson = infinite_poisson(distribution)) {
    return static_cast<double>(truncated_poisson_sum(
        *poisson, [kind, m](unsigned i) { return moment_function_long(kind, m, i); }, 1.0L,
        options));
  }
  return exact_expectation(exact_masses(distribution),
                           [kind, m](unsigned i) { return moment_function(kind, m, i); });
}

Value raw_moment(const Distribution& distribution, unsigned m, const SeriesOptions& options) {
  if (const auto* poisson = infinite_poisson(distribution); poisson && poisson->classical()) {
    return poisson_moment_closed_form(*poisson, MomentKind::kRaw, m);
  }
  return direct_moment(distribution, MomentKind::kRaw, m, options);
}

Value falling_factorial_moment(const Distribution& distribution, unsigned m,
                               const SeriesOptions& options) {
  if (const auto* poisson = infinite_poisson(distribution); poisson && poisson->classical()) {
    return poisson->alpha().pow(m);
  }
  return direct_moment(distribution, MomentKind::kFalling, m, options);
}

Value rising_factorial_moment(const Distribution& distribution, unsigned m,
                              const SeriesOptions& options) {
  return direct_moment(distribution, MomentKind::kRising, m, options);
}

ExactRational poisson_moment_closed_form(const DegeneratePoisson& d, MomentKind kind, unsigned m) {
  const ExactRational& alpha = d.alpha();
  const ExactRational& lambda = d.lambda();
  switch (kind) {
    case MomentKind::kRaw:
      return evaluate_substituted(degenerate_bell_polynomial(m, lambda), alpha, lambda);
    case MomentKind::kRising:
      return evaluate_substituted(degenerate_lah_bell_polynomial(m, lambda), alpha, lambda);
    case MomentKind::kFalling: {
      if (d.classical()) return alpha.pow(m);
      ExactRational sum(0);
      for (unsigned k = 0; k <= m; ++k) {
        const BigInt s = stirling1_signed(m, k);
        if (s == 0) continue;
        sum += ExactRational(s) *
               evaluate_substituted(degenerate_bell_polynomial(k, lambda), alpha, lambda);
      }
      return sum;
    }
  }
  return 0;
}

ExactRational double_stirling_rising_moment(const DegeneratePoisson& d, unsigned m) {
  const ExactRational y = substituted_variable(d.alpha(), d.lambda());
  ExactRational sum(0);
  for (unsigned l = 0; l <= m; ++l) {
    sum += ExactRational(double_stirling_coefficient(m, l)) *
           degenerate_falling_factorial(1, l, d.lambda()) * y.pow(l);
  }
  return sum;
}

std::optional<ExactRational> exact_moment_target(const Distribution& distribution, MomentKind kind,
                                                 unsigned m) {
  if (m == 0) return ExactRational(1);
  if (const auto* poisson = std::get_if<DegeneratePoisson>(&distribution)) {
    return poisson_moment_closed_form(*poisson, kind, m);
  }
  return direct_moment(distribution, kind, m).exact();
}

namespace {

ExactRational pgf_argument(const ExactRational& t) {
  if (t.abs() >= ExactRational(1)) {
    throw DomainError("generating function needs |t| < 1, got t = " + t.to_string());
  }
  return (ExactRational(1) - t).reciprocal();
}

}  // namespace

Value pgf_eval(const Distribution& distribution, const ExactRational& t) {
  const ExactRational z = pgf_argument(t);
  if (t.is_zero()) return ExactRational(1);
  const auto* poisson = std::get_if<DegeneratePoisson>(&distribution);
  if (poisson == nullptr) return pgf_direct(distribution, t);

  const ExactRational& alpha = poisson->alpha();
  const ExactRational& lambda = poisson->lambda();
  if (poisson->classical()) return std::exp((alpha * (z - ExactRational(1))).to_double());

  const ExactRational shifted = ExactRational(1) + lambda * alpha * z;
  if (shifted.sign() <= 0) {
    throw DomainError("degenerate generating function needs 1 + lambda*alpha/(1-t) > 0");
  }
  const ExactRational ratio = shifted / (ExactRational(1) + lambda * alpha);
  if (const auto m = poisson->support_cutoff()) return ratio.pow(*m);
  // ((1 + lambda alpha z)/(1 + lambda alpha))^(1/lambda)
  return static_cast<double>(std::exp(
      (std::log1p((lambda * alpha * z).to_long_double()) -
       std::log1p((lambda * alpha).to_long_double())) /
      lambda.to_long_double()));
}

Value pgf_direct(const Distribution& distribution, const ExactRational& t,
                 const SeriesOptions& options) {
  const ExactRational z = pgf_argument(t);
  if (const auto* poisson = infinite_poisson(distribution)) {
    return static_cast<double>(truncated_poisson_sum(
        *poisson, [](unsigned) { return 1.0L; }, z.to_long_double(), options));
  }
  const auto masses = exact_masses(distribution);
  ExactRational sum(0);
  ExactRational power(1);
  for (const auto& mass : masses) {
    sum += power * mass;
    power *= z;
  }
  return sum;
}

}  // namespace lahbell
