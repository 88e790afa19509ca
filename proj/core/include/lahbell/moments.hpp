#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "lahbell/distributions.hpp"
#include "lahbell/rational.hpp"
#include "lahbell/value.hpp"

namespace lahbell {

enum class MomentKind {
  kRaw,      // E[X^m]
  kFalling,  // E[(X)_m]
  kRising,   // E[<X>_m]
};

std::string to_string(MomentKind kind);
std::optional<MomentKind> parse_moment_kind(std::string_view text);

/// x^m, (x)_m or <x>_m at an integer point.
ExactRational moment_function(MomentKind kind, unsigned order, unsigned x);
double moment_function_approx(MomentKind kind, unsigned order, unsigned x);

/// Stopping rule for infinite sums: stop once `patience` consecutive terms
/// each fall below tolerance * (accumulated absolute sum); give up with
/// ConvergenceError after `term_budget` terms.
struct SeriesOptions {
  double tolerance = 1e-14;
  unsigned term_budget = 100000;
  unsigned patience = 5;
};

/// n p (1-lambda)_{n-1,lambda} / (1)_{n,lambda}.
ExactRational db_mean(const DegenerateBinomial& distribution);

/// n p / (1)_{n,lambda} * (1-2lambda)_{n-2,lambda} * ((n-1)p + 1 - n lambda - E[X](1-lambda))
/// for n >= 2; the closed form is undefined for n < 2, where the variance is
/// summed over the support instead.
ExactRational db_variance(const DegenerateBinomial& distribution);

/// (1/(1)_{n,lambda}) sum_i C(n,i) i^m (p)_{i,lambda} (1-p)_{n-i,lambda}.
ExactRational db_raw_moment(const DegenerateBinomial& distribution, unsigned m);

/// E[e^{tX}] = (1/(1)_{n,lambda}) sum_i e^{it} C(n,i) (p)_{i,lambda} (1-p)_{n-i,lambda}.
double db_mgf_eval(const DegenerateBinomial& distribution, double t);

/// (alpha/(1+alpha lambda), alpha/(1+alpha lambda)^2).
std::pair<ExactRational, ExactRational> dp_mean_variance(const DegeneratePoisson& distribution);

/// sum_i f(i) p(i) evaluated directly: exact over a finite support, a
/// truncated series otherwise. m = 0 is exactly 1.
Value direct_moment(const Distribution& distribution, MomentKind kind, unsigned m,
                    const SeriesOptions& options = {});

/// E[X^m]. Classical Poisson moments are the Bell polynomial B_m(alpha).
Value raw_moment(const Distribution& distribution, unsigned m, const SeriesOptions& options = {});

/// E[(X)_m]. Classical Poisson returns the closed form alpha^m.
Value falling_factorial_moment(const Distribution& distribution, unsigned m,
                               const SeriesOptions& options = {});

/// E[<X>_m]. Classical Poisson is summed as a truncated series so it can be
/// compared against B_m^L(alpha).
Value rising_factorial_moment(const Distribution& distribution, unsigned m,
                              const SeriesOptions& options = {});

/// Closed forms for the (degenerate) Poisson family:
///   raw     B_{m,lambda}(alpha)  (B_m(alpha) at lambda = 0)
///   falling alpha^m at lambda = 0, else sum_k S1(m,k) B_{k,lambda}(alpha)
///   rising  B_{m,lambda}^L(alpha) (B_m^L(alpha) at lambda = 0)
ExactRational poisson_moment_closed_form(const DegeneratePoisson& distribution, MomentKind kind,
                                         unsigned m);

/// sum_l (sum_k (-1)^(m-k) S1(m,k) S2(k,l)) (1)_{l,lambda} (alpha/(1+lambda alpha))^l.
ExactRational double_stirling_rising_moment(const DegeneratePoisson& distribution, unsigned m);

/// Exact expectation when one is available: finite supports by summation,
/// the Poisson family through poisson_moment_closed_form.
std::optional<ExactRational> exact_moment_target(const Distribution& distribution, MomentKind kind,
                                                 unsigned m);

/// E[(1/(1-t))^X] from the closed form: exp(alpha(1/(1-t) - 1)) for the
/// classical Poisson law, e_lambda^{-1}(alpha) e_lambda(alpha/(1-t)) for the
/// degenerate one, and the finite sum for binomial laws. Exact when 1/lambda is
/// an integer. Requires |t| < 1 and, for degenerate Poisson laws,
/// 1 + lambda alpha/(1-t) > 0; throws DomainError otherwise.
Value pgf_eval(const Distribution& distribution, const ExactRational& t);

/// sum_i (1/(1-t))^i p(i), exact over finite supports and truncated
/// otherwise. Throws ConvergenceError when the series does not settle.
Value pgf_direct(const Distribution& distribution, const ExactRational& t,
                 const SeriesOptions& options = {});

}  // namespace lahbell
