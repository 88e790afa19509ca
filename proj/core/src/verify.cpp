#include "lahbell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lahbell/distributions.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/estimation.hpp"
#include "lahbell/factorials.hpp"
#include "lahbell/families.hpp"
#include "lahbell/moments.hpp"
#include "lahbell/triangles.hpp"
#include "lahbell/value.hpp"

namespace lahbell {

namespace {

struct Context {
  std::string_view identity;
  const ParameterSet& params;
  std::uint64_t samples;
  double z_threshold;
  SamplerStream& stream;
};

const ExactRational& param(const Context& ctx, std::string_view name) {
  const auto it = ctx.params.find(name);
  if (it == ctx.params.end()) {
    throw std::invalid_argument("identity '" + std::string(ctx.identity) + "' needs parameter '" +
                                std::string(name) + "'");
  }
  return it->second;
}

unsigned index_param(const Context& ctx, std::string_view name) {
  const ExactRational& value = param(ctx, name);
  if (!value.is_integer() || value.sign() < 0 || value.numerator() > 100000) {
    throw std::invalid_argument("parameter '" + std::string(name) +
                                "' must be an integer in [0, 100000], got " + value.to_string());
  }
  return static_cast<unsigned>(value.numerator().get_ui());
}

VerificationReport start(const Context& ctx, VerificationMode mode) {
  VerificationReport report;
  report.identity = std::string(ctx.identity);
  for (const auto& [name, value] : ctx.params) report.params[name] = value.to_string();
  report.mode = mode;
  return report;
}

VerificationReport exact(const Context& ctx, const ExactRational& lhs, const ExactRational& rhs) {
  auto report = start(ctx, VerificationMode::kExact);
  report.lhs = lhs.to_string();
  report.rhs = rhs.to_string();
  const bool equal = lhs == rhs;
  report.discrepancy = equal ? "0" : format_decimal((lhs - rhs).abs().to_double());
  report.status = equal ? VerificationStatus::kPass : VerificationStatus::kFail;
  return report;
}

// Element-wise comparison of two exact sequences (polynomial coefficients or
// transformed value lists); the discrepancy is the largest entry difference.
VerificationReport exact_sequence(const Context& ctx, const std::vector<ExactRational>& lhs,
                                  const std::vector<ExactRational>& rhs) {
  auto render = [](const std::vector<ExactRational>& values) {
    std::string text = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) text += ',';
      text += values[i].to_string();
    }
    return text + "]";
  };
  auto report = start(ctx, VerificationMode::kExact);
  report.lhs = render(lhs);
  report.rhs = render(rhs);
  ExactRational worst(0);
  for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
    const ExactRational a = i < lhs.size() ? lhs[i] : ExactRational(0);
    const ExactRational b = i < rhs.size() ? rhs[i] : ExactRational(0);
    worst = std::max(worst, (a - b).abs());
  }
  report.discrepancy = worst.is_zero() ? "0" : format_decimal(worst.to_double());
  report.status = worst.is_zero() ? VerificationStatus::kPass : VerificationStatus::kFail;
  return report;
}

VerificationReport exact_polynomials(const Context& ctx, const RationalPolynomial& lhs,
                                     const RationalPolynomial& rhs) {
  auto report = exact_sequence(ctx, lhs.coefficients(), rhs.coefficients());
  report.lhs = lhs.to_string();
  report.rhs = rhs.to_string();
  if (lhs.variable() != rhs.variable()) report.status = VerificationStatus::kFail;
  return report;
}

// A relative check scales the tolerance by max(1, |rhs|).
VerificationReport numeric(const Context& ctx, const Value& lhs, const Value& rhs,
                           double tolerance, bool relative = false) {
  auto report = start(ctx, VerificationMode::kNumeric);
  report.params[relative ? "relative_tolerance" : "tolerance"] = format_decimal(tolerance);
  report.lhs = lhs.to_string();
  report.rhs = rhs.to_string();
  const double scale = relative ? std::max(1.0, std::fabs(rhs.approx())) : 1.0;
  const double difference = std::fabs(lhs.approx() - rhs.approx()) / scale;
  report.discrepancy = format_decimal(difference);
  report.status = difference <= tolerance ? VerificationStatus::kPass : VerificationStatus::kFail;
  return report;
}

// Exact when both sides are exact, numeric otherwise.
VerificationReport compare(const Context& ctx, const Value& lhs, const Value& rhs,
                           double tolerance = kSeriesTolerance) {
  if (lhs.is_exact() && rhs.is_exact()) return exact(ctx, lhs.exact(), rhs.exact());
  return numeric(ctx, lhs, rhs, tolerance);
}

VerificationReport statistical(const Context& ctx, const Distribution& distribution,
                               MomentKind kind, unsigned order, const ExactRational& target) {
  auto report = start(ctx, VerificationMode::kStatistical);
  report.params["z_threshold"] = format_decimal(ctx.z_threshold);
  report.seed = ctx.stream.master_seed();
  report.samples = ctx.samples;
  report.lhs = target.to_string();
  try {
    const MomentEstimate estimate =
        estimate_moment(distribution, kind, order, ctx.samples, ctx.stream);
    const double z = std::fabs(z_score(estimate, target.to_double()));
    report.rhs = format_decimal(estimate.estimate);
    report.discrepancy = format_decimal(z);
    report.status = z <= ctx.z_threshold ? VerificationStatus::kPass : VerificationStatus::kFail;
  } catch (const SignedMassError&) {
    report.rhs = "n/a";
    report.discrepancy = "n/a";
    report.status = VerificationStatus::kSkipped;
  }
  return report;
}

DegenerateBinomial binomial_from(const Context& ctx) {
  return DegenerateBinomial(index_param(ctx, "n"), param(ctx, "p"), param(ctx, "lambda"));
}

DegeneratePoisson poisson_from(const Context& ctx, bool degenerate = true) {
  return DegeneratePoisson(param(ctx, "alpha"), degenerate ? param(ctx, "lambda") : ExactRational(0));
}

// ---- number triangles -----------------------------------------------------

VerificationReport stirling_inversion(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const unsigned m = index_param(ctx, "m");
  BigInt sum = 0;
  for (unsigned k = m; k <= n; ++k) sum += stirling1_signed(n, k) * stirling2(k, m);
  return exact(ctx, sum, n == m ? 1 : 0);
}

VerificationReport stirling_inversion_dual(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const unsigned m = index_param(ctx, "m");
  BigInt sum = 0;
  for (unsigned k = m; k <= n; ++k) sum += stirling2(n, k) * stirling1_signed(k, m);
  return exact(ctx, sum, n == m ? 1 : 0);
}

VerificationReport stirling1_row_sum(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  BigInt sum = 0;
  for (unsigned k = 0; k <= n; ++k) sum += stirling1_unsigned(n, k);
  return exact(ctx, sum, factorial(n));
}

VerificationReport lah_closed_form(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const unsigned k = index_param(ctx, "k");
  return exact(ctx, lah_number(n, k), lah_number_closed_form(n, k));
}

VerificationReport lah_double_stirling(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const unsigned l = index_param(ctx, "l");
  return exact(ctx, double_stirling_coefficient(n, l), lah_number(n, l));
}

// ---- Lah-Bell and Bell polynomials ----------------------------------------

VerificationReport lahbell_series(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const ExactRational& x = param(ctx, "x");
  return exact(ctx, lah_bell_series_coefficients(x, n)[n], lah_bell_polynomial(n)(x));
}

VerificationReport lemma1(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  RationalPolynomial sum;
  for (unsigned k = 0; k <= n; ++k) sum += bell_polynomial(k) * ExactRational(stirling1_signed(n, k));
  return exact_polynomials(ctx, sum, RationalPolynomial::monomial(1, n));
}

VerificationReport theorem4(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const ExactRational& alpha = param(ctx, "alpha");
  std::vector<ExactRational> bell_values;
  for (unsigned k = 0; k <= n; ++k) bell_values.push_back(bell_polynomial(k)(alpha));
  return exact(ctx, lahbell_from_bell(n, bell_values), lah_bell_polynomial(n)(alpha));
}

VerificationReport theorem8_constructions(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const ExactRational& lambda = param(ctx, "lambda");
  return exact_polynomials(ctx, degenerate_lah_bell_polynomial(n, lambda),
                           degenerate_lah_bell_polynomial_via_bell(n, lambda));
}

VerificationReport theorem8_roundtrip(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const ExactRational& lambda = param(ctx, "lambda");
  const ExactRational& x = param(ctx, "x");
  std::vector<ExactRational> inputs;
  for (unsigned k = 0; k <= n; ++k) {
    inputs.push_back(evaluate_substituted(degenerate_bell_polynomial(k, lambda), x, lambda));
  }
  std::vector<ExactRational> forward;
  for (unsigned k = 0; k <= n; ++k) {
    forward.push_back(unsigned_stirling1_transform<ExactRational>(k, inputs));
  }
  std::vector<ExactRational> back;
  for (unsigned k = 0; k <= n; ++k) {
    back.push_back(alternating_stirling2_transform<ExactRational>(k, forward));
  }
  return exact_sequence(ctx, back, inputs);
}

VerificationReport theorem8_inverse(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const ExactRational& lambda = param(ctx, "lambda");
  const ExactRational& x = param(ctx, "x");
  std::vector<ExactRational> lahbell_values;
  for (unsigned k = 0; k <= n; ++k) {
    lahbell_values.push_back(evaluate_substituted(degenerate_lah_bell_polynomial(k, lambda), x, lambda));
  }
  return exact(ctx, bell_from_lahbell_degenerate(n, lahbell_values),
               evaluate_substituted(degenerate_bell_polynomial(n, lambda), x, lambda));
}

VerificationReport dlahbell_limit(const Context& ctx) {
  const unsigned n = index_param(ctx, "n");
  const ExactRational& lambda = param(ctx, "lambda");
  const ExactRational& x = param(ctx, "x");
  const ExactRational degenerate =
      evaluate_substituted(degenerate_lah_bell_polynomial(n, lambda), x, lambda);
  return numeric(ctx, degenerate.to_double(), lah_bell_polynomial(n)(x), kLimitTolerance, true);
}

// ---- degenerate binomial --------------------------------------------------

VerificationReport db_normalization(const Context& ctx) {
  const auto d = binomial_from(ctx);
  ExactRational total(0);
  for (unsigned i = 0; i <= d.trials(); ++i) total += db_pmf(d, i);
  return exact(ctx, total, 1);
}

VerificationReport theorem5_mean(const Context& ctx) {
  const auto d = binomial_from(ctx);
  ExactRational brute(0);
  for (unsigned i = 0; i <= d.trials(); ++i) brute += ExactRational(i) * db_pmf(d, i);
  return exact(ctx, db_mean(d), brute);
}

VerificationReport theorem6_variance(const Context& ctx) {
  const auto d = binomial_from(ctx);
  ExactRational first(0);
  ExactRational second(0);
  for (unsigned i = 0; i <= d.trials(); ++i) {
    const ExactRational mass = db_pmf(d, i);
    first += ExactRational(i) * mass;
    second += ExactRational(i * i) * mass;
  }
  return exact(ctx, db_variance(d), second - first * first);
}

VerificationReport db_mean_limit(const Context& ctx) {
  const auto d = binomial_from(ctx);
  return numeric(ctx, db_mean(d).to_double(), ExactRational(d.trials()) * d.p(), kLimitTolerance);
}

VerificationReport db_variance_limit(const Context& ctx) {
  const auto d = binomial_from(ctx);
  return numeric(ctx, db_variance(d).to_double(),
                 ExactRational(d.trials()) * d.p() * (ExactRational(1) - d.p()), kLimitTolerance);
}

VerificationReport db_mean_mc(const Context& ctx) {
  const auto d = binomial_from(ctx);
  return statistical(ctx, d, MomentKind::kRaw, 1, db_mean(d));
}

// ---- degenerate Poisson ---------------------------------------------------

VerificationReport dp_normalization(const Context& ctx) {
  const Distribution d = poisson_from(ctx);
  return compare(ctx, pgf_direct(d, 0), ExactRational(1));
}

VerificationReport dp_mean(const Context& ctx) {
  const auto d = poisson_from(ctx);
  return compare(ctx, direct_moment(d, MomentKind::kRaw, 1), dp_mean_variance(d).first);
}

VerificationReport dp_variance(const Context& ctx) {
  const auto d = poisson_from(ctx);
  const Value first = direct_moment(d, MomentKind::kRaw, 1);
  const Value second = direct_moment(d, MomentKind::kRaw, 2);
  const ExactRational expected = dp_mean_variance(d).second;
  if (first.is_exact() && second.is_exact()) {
    return exact(ctx, second.exact() - first.exact() * first.exact(), expected);
  }
  return numeric(ctx, second.approx() - first.approx() * first.approx(), expected, kSeriesTolerance);
}

VerificationReport theorem7_rising(const Context& ctx) {
  const auto d = poisson_from(ctx);
  const unsigned m = index_param(ctx, "m");
  return compare(ctx, direct_moment(d, MomentKind::kRising, m),
                 poisson_moment_closed_form(d, MomentKind::kRising, m));
}

VerificationReport theorem9_double_stirling(const Context& ctx) {
  const auto d = poisson_from(ctx);
  const unsigned m = index_param(ctx, "m");
  return compare(ctx, direct_moment(d, MomentKind::kRising, m), double_stirling_rising_moment(d, m));
}

VerificationReport theorem9_pgf(const Context& ctx) {
  const Distribution d = poisson_from(ctx);
  const ExactRational& t = param(ctx, "t");
  return compare(ctx, pgf_eval(d, t), pgf_direct(d, t));
}

VerificationReport dp_mean_mc(const Context& ctx) {
  const auto d = poisson_from(ctx);
  return statistical(ctx, d, MomentKind::kRaw, 1, dp_mean_variance(d).first);
}

VerificationReport theorem7_rising_mc(const Context& ctx) {
  const auto d = poisson_from(ctx);
  const unsigned m = index_param(ctx, "m");
  return statistical(ctx, d, MomentKind::kRising, m,
                     poisson_moment_closed_form(d, MomentKind::kRising, m));
}

// ---- classical Poisson ----------------------------------------------------

VerificationReport eq10_raw_series(const Context& ctx) {
  const auto d = poisson_from(ctx, false);
  const unsigned m = index_param(ctx, "m");
  return compare(ctx, direct_moment(d, MomentKind::kRaw, m), bell_polynomial(m)(d.alpha()));
}

VerificationReport eq14_falling_series(const Context& ctx) {
  const auto d = poisson_from(ctx, false);
  const unsigned m = index_param(ctx, "m");
  return compare(ctx, direct_moment(d, MomentKind::kFalling, m), d.alpha().pow(m));
}

VerificationReport theorem2_rising_series(const Context& ctx) {
  const auto d = poisson_from(ctx, false);
  const unsigned m = index_param(ctx, "m");
  return compare(ctx, direct_moment(d, MomentKind::kRising, m), lah_bell_polynomial(m)(d.alpha()));
}

VerificationReport theorem3_pgf(const Context& ctx) {
  const Distribution d = poisson_from(ctx, false);
  const ExactRational& t = param(ctx, "t");
  return compare(ctx, pgf_eval(d, t), pgf_direct(d, t));
}

VerificationReport theorem2_rising(const Context& ctx) {
  const auto d = poisson_from(ctx, false);
  const unsigned m = index_param(ctx, "m");
  return statistical(ctx, d, MomentKind::kRising, m, lah_bell_polynomial(m)(d.alpha()));
}

VerificationReport eq14_falling(const Context& ctx) {
  const auto d = poisson_from(ctx, false);
  const unsigned m = index_param(ctx, "m");
  return statistical(ctx, d, MomentKind::kFalling, m, d.alpha().pow(m));
}

using Handler = VerificationReport (*)(const Context&);

const std::map<std::string, Handler, std::less<>>& registry() {
  static const std::map<std::string, Handler, std::less<>> handlers = {
      {"stirling-inversion", stirling_inversion},
      {"stirling-inversion-dual", stirling_inversion_dual},
      {"stirling1-row-sum", stirling1_row_sum},
      {"lah-closed-form", lah_closed_form},
      {"lah-double-stirling", lah_double_stirling},
      {"lahbell-series", lahbell_series},
      {"lemma1", lemma1},
      {"theorem4", theorem4},
      {"theorem8-constructions", theorem8_constructions},
      {"theorem8-roundtrip", theorem8_roundtrip},
      {"theorem8-inverse", theorem8_inverse},
      {"dlahbell-limit", dlahbell_limit},
      {"db-normalization", db_normalization},
      {"theorem5-mean", theorem5_mean},
      {"theorem6-variance", theorem6_variance},
      {"db-mean-limit", db_mean_limit},
      {"db-variance-limit", db_variance_limit},
      {"db-mean-mc", db_mean_mc},
      {"dp-normalization", dp_normalization},
      {"dp-mean", dp_mean},
      {"dp-variance", dp_variance},
      {"theorem7-rising", theorem7_rising},
      {"theorem9-double-stirling", theorem9_double_stirling},
      {"theorem9-pgf", theorem9_pgf},
      {"dp-mean-mc", dp_mean_mc},
      {"theorem7-rising-mc", theorem7_rising_mc},
      {"eq10-raw-series", eq10_raw_series},
      {"eq14-falling-series", eq14_falling_series},
      {"theorem2-rising-series", theorem2_rising_series},
      {"theorem3-pgf", theorem3_pgf},
      {"theorem2-rising", theorem2_rising},
      {"eq14-falling", eq14_falling},
  };
  return handlers;
}

// ---- suites ---------------------------------------------------------------

// Parameter draws use a stream index far above any instance index.
constexpr std::uint64_t kParameterStream = std::uint64_t{1} << 40;

ExactRational random_fraction(SamplerStream& stream, unsigned max_denominator, bool allow_zero,
                              bool allow_one) {
  const std::uint64_t den = 1 + stream.next_below(max_denominator);
  const std::uint64_t low = allow_zero ? 0 : 1;
  const std::uint64_t high = allow_one ? den : den - 1;
  if (high < low) return random_fraction(stream, max_denominator, allow_zero, allow_one);
  const std::uint64_t num = low + stream.next_below(high - low + 1);
  return ExactRational(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)));
}

ParameterSet random_binomial_parameters(SamplerStream& stream, unsigned n_max) {
  for (;;) {
    const auto n = static_cast<unsigned>(stream.next_below(n_max + 1));
    ExactRational p = random_fraction(stream, 20, true, true);
    ExactRational lambda = random_fraction(stream, 20, true, false);
    if (degenerate_falling_factorial(1, n, lambda).is_zero()) continue;
    return {{"n", n}, {"p", std::move(p)}, {"lambda", std::move(lambda)}};
  }
}

void add(std::vector<SuiteInstance>& out, std::string identity, ParameterSet params) {
  out.push_back({std::move(identity), std::move(params)});
}

void stirling_suite(std::vector<SuiteInstance>& out, const SuiteOptions& options) {
  const unsigned top = options.n_max;
  for (unsigned n = 0; n <= top; ++n) {
    for (unsigned m = 0; m <= top; ++m) {
      add(out, "stirling-inversion", {{"n", n}, {"m", m}});
      add(out, "stirling-inversion-dual", {{"n", n}, {"m", m}});
    }
  }
  for (unsigned n = 0; n <= top; ++n) add(out, "stirling1-row-sum", {{"n", n}});
  for (unsigned n = 0; n <= top; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      add(out, "lah-closed-form", {{"n", n}, {"k", k}});
      add(out, "lah-double-stirling", {{"n", n}, {"l", k}});
    }
  }
}

void lahbell_suite(std::vector<SuiteInstance>& out, const SuiteOptions& options) {
  const unsigned top = options.n_max;
  const unsigned moment_top = std::min(top, 8u);
  for (const char* x : {"1", "2", "1/2", "-1/3"}) {
    for (unsigned n = 0; n <= top; ++n) {
      add(out, "lahbell-series", {{"x", ExactRational::parse(x)}, {"n", n}});
    }
  }
  for (unsigned n = 0; n <= top; ++n) add(out, "lemma1", {{"n", n}});
  for (const char* alpha : {"1", "2", "3/2"}) {
    for (unsigned n = 0; n <= top; ++n) {
      add(out, "theorem4", {{"n", n}, {"alpha", ExactRational::parse(alpha)}});
    }
  }
  SamplerStream draws(options.seed, kParameterStream + 1);
  for (int trial = 0; trial < 5; ++trial) {
    const ExactRational lambda = random_fraction(draws, 30, false, false);
    const ExactRational x = random_fraction(draws, 10, false, true) * ExactRational(3);
    for (unsigned n = 0; n <= top; ++n) {
      add(out, "theorem8-constructions", {{"n", n}, {"lambda", lambda}});
      add(out, "theorem8-roundtrip", {{"n", n}, {"lambda", lambda}, {"x", x}});
      add(out, "theorem8-inverse", {{"n", n}, {"lambda", lambda}, {"x", x}});
    }
  }
  for (unsigned n = 0; n <= moment_top; ++n) {
    add(out, "dlahbell-limit",
        {{"n", n}, {"x", 1}, {"lambda", ExactRational(BigInt(1), BigInt(1000000))}});
  }
  for (const char* alpha : {"1/2", "1", "2", "5"}) {
    for (unsigned m = 0; m <= moment_top; ++m) {
      const ParameterSet params{{"alpha", ExactRational::parse(alpha)}, {"m", m}};
      add(out, "eq10-raw-series", params);
      add(out, "eq14-falling-series", params);
      add(out, "theorem2-rising-series", params);
    }
  }
  add(out, "theorem2-rising", {{"alpha", 2}, {"m", 3}});
  add(out, "eq14-falling", {{"alpha", 2}, {"m", 2}});
}

void dbinomial_suite(std::vector<SuiteInstance>& out, const SuiteOptions& options) {
  std::vector<ParameterSet> cases = {
      {{"n", 2}, {"p", ExactRational(BigInt(1), BigInt(2))}, {"lambda", ExactRational(BigInt(1), BigInt(4))}},
      {{"n", 3}, {"p", ExactRational(BigInt(1), BigInt(10))}, {"lambda", ExactRational(BigInt(2), BigInt(5))}},
      {{"n", 5}, {"p", ExactRational(BigInt(1), BigInt(3))}, {"lambda", 0}},
  };
  SamplerStream draws(options.seed, kParameterStream + 2);
  for (unsigned trial = 0; trial < options.trials; ++trial) {
    cases.push_back(random_binomial_parameters(draws, std::max(options.n_max, 1u)));
  }
  for (const auto& params : cases) {
    add(out, "db-normalization", params);
    add(out, "theorem5-mean", params);
    add(out, "theorem6-variance", params);
  }
  const ParameterSet near_classical{{"n", 10},
                                    {"p", ExactRational(BigInt(1), BigInt(3))},
                                    {"lambda", ExactRational(BigInt(1), BigInt(1000000))}};
  add(out, "db-mean-limit", near_classical);
  add(out, "db-variance-limit", near_classical);
  add(out, "db-mean-mc", cases.front());
}

void dpoisson_suite(std::vector<SuiteInstance>& out, const SuiteOptions& options) {
  const unsigned m_top = std::clamp(options.n_max, 2u, 40u);
  const unsigned moment_top = std::min(options.n_max, 8u);
  for (unsigned m = 2; m <= m_top; ++m) {
    const ExactRational lambda(BigInt(1), BigInt(m));
    for (const char* alpha_text : {"1/2", "1", "3"}) {
      const ExactRational alpha = ExactRational::parse(alpha_text);
      if (alpha >= ExactRational(m)) continue;
      const ParameterSet base{{"alpha", alpha}, {"lambda", lambda}};
      add(out, "dp-normalization", base);
      add(out, "dp-mean", base);
      add(out, "dp-variance", base);
      for (unsigned order = 0; order <= moment_top; ++order) {
        ParameterSet params = base;
        params.emplace("m", order);
        add(out, "theorem7-rising", params);
        add(out, "theorem9-double-stirling", params);
      }
    }
  }
  // 1/lambda not an integer: infinite support, truncated series.
  const ParameterSet infinite{{"alpha", 1}, {"lambda", ExactRational(BigInt(2), BigInt(5))}};
  add(out, "dp-normalization", infinite);
  add(out, "dp-mean", infinite);
  add(out, "dp-variance", infinite);
  for (unsigned order = 0; order <= std::min(moment_top, 4u); ++order) {
    ParameterSet params = infinite;
    params.emplace("m", order);
    add(out, "theorem7-rising", params);
    add(out, "theorem9-double-stirling", params);
  }
  add(out, "dp-mean-mc", {{"alpha", 1}, {"lambda", ExactRational(BigInt(1), BigInt(2))}});
  add(out, "theorem7-rising-mc",
      {{"alpha", 1}, {"lambda", ExactRational(BigInt(1), BigInt(3))}, {"m", 2}});
}

void pgf_suite(std::vector<SuiteInstance>& out, const SuiteOptions&) {
  const std::vector<ExactRational> ts = {ExactRational(BigInt(-1), BigInt(2)),
                                         ExactRational(BigInt(-1), BigInt(4)),
                                         ExactRational(BigInt(1), BigInt(4)),
                                         ExactRational(BigInt(1), BigInt(2))};
  for (const char* alpha : {"1/2", "1", "2"}) {
    for (const auto& t : ts) add(out, "theorem3-pgf", {{"alpha", ExactRational::parse(alpha)}, {"t", t}});
  }
  for (const char* alpha : {"1/2", "1"}) {
    for (unsigned m : {2u, 3u, 5u}) {
      for (const auto& t : ts) {
        add(out, "theorem9-pgf",
            {{"alpha", ExactRational::parse(alpha)}, {"lambda", ExactRational(BigInt(1), BigInt(m))}, {"t", t}});
      }
    }
  }
  for (const auto& t : ts) {
    add(out, "theorem9-pgf", {{"alpha", 1}, {"lambda", ExactRational(BigInt(2), BigInt(5))}, {"t", t}});
  }
}

}  // namespace

std::string to_string(VerificationMode mode) {
  switch (mode) {
    case VerificationMode::kExact:
      return "EXACT";
    case VerificationMode::kNumeric:
      return "NUMERIC";
    case VerificationMode::kStatistical:
      return "STATISTICAL";
  }
  return "EXACT";
}

std::string to_string(VerificationStatus status) {
  switch (status) {
    case VerificationStatus::kPass:
      return "PASS";
    case VerificationStatus::kFail:
      return "FAIL";
    case VerificationStatus::kSkipped:
      return "SKIPPED";
  }
  return "FAIL";
}

VerificationReport verify_identity(std::string_view identity, const ParameterSet& params,
                                   std::uint64_t samples, double z_threshold,
                                   SamplerStream& stream) {
  const auto& handlers = registry();
  const auto it = handlers.find(identity);
  if (it == handlers.end()) throw UnknownIdentityError(std::string(identity));
  if (samples == 0) throw std::invalid_argument("verification needs a positive sample count");
  const Context ctx{it->first, params, samples, z_threshold, stream};
  return it->second(ctx);
}

std::vector<std::string> registered_identities() {
  std::vector<std::string> tags;
  for (const auto& [tag, handler] : registry()) tags.push_back(tag);
  return tags;
}

std::optional<Suite> parse_suite(std::string_view text) {
  if (text == "all") return Suite::kAll;
  if (text == "stirling") return Suite::kStirling;
  if (text == "lahbell") return Suite::kLahBell;
  if (text == "dbinomial") return Suite::kDBinomial;
  if (text == "dpoisson") return Suite::kDPoisson;
  if (text == "pgf") return Suite::kPgf;
  return std::nullopt;
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::kAll:
      return "all";
    case Suite::kStirling:
      return "stirling";
    case Suite::kLahBell:
      return "lahbell";
    case Suite::kDBinomial:
      return "dbinomial";
    case Suite::kDPoisson:
      return "dpoisson";
    case Suite::kPgf:
      return "pgf";
  }
  return "all";
}

std::vector<SuiteInstance> suite_instances(Suite suite, const SuiteOptions& options) {
  std::vector<SuiteInstance> out;
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kStirling) stirling_suite(out, options);
  if (all || suite == Suite::kLahBell) lahbell_suite(out, options);
  if (all || suite == Suite::kDBinomial) dbinomial_suite(out, options);
  if (all || suite == Suite::kDPoisson) dpoisson_suite(out, options);
  if (all || suite == Suite::kPgf) pgf_suite(out, options);
  return out;
}

std::vector<VerificationReport> run_suite(Suite suite, const SuiteOptions& options) {
  const auto instances = suite_instances(suite, options);
  std::vector<VerificationReport> reports;
  reports.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    SamplerStream stream(options.seed, i);
    reports.push_back(verify_identity(instances[i].identity, instances[i].params, options.samples,
                                      options.z_threshold, stream));
  }
  return reports;
}

}  // namespace lahbell
