#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lahbell/rational.hpp"
#include "lahbell/value.hpp"

namespace lahbell {

/// Degenerate binomial variable on {0..n} with masses
///   C(n,i) (p)_{i,lambda} (1-p)_{n-i,lambda} / (1)_{n,lambda}.
/// lambda = 0 is the classical binomial. For generic lambda some masses are
/// negative; the masses still sum to one and all moment identities hold for
/// the resulting signed measure.
class DegenerateBinomial {
 public:
  /// Requires p in [0,1], lambda in [0,1) and (1)_{n,lambda} != 0, i.e.
  /// lambda != 1/j for 1 <= j <= n-1. Throws DomainError otherwise.
  DegenerateBinomial(unsigned trials, ExactRational p, ExactRational lambda = 0);

  unsigned trials() const { return trials_; }
  const ExactRational& p() const { return p_; }
  const ExactRational& lambda() const { return lambda_; }
  /// (1)_{n,lambda}.
  const ExactRational& normalizer() const { return normalizer_; }

 private:
  unsigned trials_;
  ExactRational p_;
  ExactRational lambda_;
  ExactRational normalizer_;
};

/// Degenerate Poisson variable with masses
///   e_lambda^{-1}(alpha) alpha^i (1)_{i,lambda} / i!,
/// where e_lambda(alpha) = (1 + lambda alpha)^(1/lambda). lambda = 0 is the
/// classical Poisson variable. When 1/lambda = m is an integer the support is
/// exactly {0..m} and every mass is a nonnegative rational.
class DegeneratePoisson {
 public:
  /// Requires alpha > 0 and lambda in [0,1). When lambda > 0 and 1/lambda is
  /// not an integer the series additionally needs lambda alpha < 1. Throws
  /// DomainError otherwise.
  explicit DegeneratePoisson(ExactRational alpha, ExactRational lambda = 0);

  const ExactRational& alpha() const { return alpha_; }
  const ExactRational& lambda() const { return lambda_; }
  bool classical() const { return lambda_.is_zero(); }
  /// m when 1/lambda = m is a positive integer.
  std::optional<unsigned> support_cutoff() const { return cutoff_; }
  bool finite_support() const { return cutoff_.has_value(); }

 private:
  ExactRational alpha_;
  ExactRational lambda_;
  std::optional<unsigned> cutoff_;
};

using Distribution = std::variant<DegenerateBinomial, DegeneratePoisson>;

inline DegeneratePoisson poisson(ExactRational alpha) { return DegeneratePoisson(std::move(alpha)); }
inline DegenerateBinomial binomial(unsigned trials, ExactRational p) {
  return DegenerateBinomial(trials, std::move(p));
}

/// Short human-readable description, e.g. "DegeneratePoisson(alpha=1, lambda=1/2)".
std::string describe(const Distribution& distribution);

struct SupportAnalysis {
  bool finite = true;
  std::optional<unsigned> cutoff;  // last index with nonzero mass
  bool all_nonnegative = true;
  std::vector<unsigned> negative_indices;

  friend bool operator==(const SupportAnalysis&, const SupportAnalysis&) = default;
};

ExactRational db_pmf(const DegenerateBinomial& distribution, unsigned i);

/// Exact when the support is finite (1/lambda integer); otherwise a floating
/// value with the irrational normaliser evaluated numerically.
Value dp_pmf(const DegeneratePoisson& distribution, unsigned i);

bool has_finite_support(const Distribution& distribution);

/// Exact masses over a finite support, index 0 up to the cutoff. Throws
/// std::invalid_argument for infinite-support distributions.
std::vector<ExactRational> exact_masses(const Distribution& distribution);

/// Reports finiteness, cutoff and the sign pattern of the masses. Negative
/// indices are listed up to min(horizon, cutoff); the first negative index is
/// always listed even when it lies past the horizon, so all_nonnegative ==
/// false always comes with a witness.
SupportAnalysis analyze_support(const Distribution& distribution, unsigned horizon = 64);

}  // namespace lahbell
