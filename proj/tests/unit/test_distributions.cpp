#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "lahbell/distributions.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/factorials.hpp"
#include "lahbell/families.hpp"
#include "lahbell/moments.hpp"
#include "oracles.hpp"

using lahbell::DegenerateBinomial;
using lahbell::DegeneratePoisson;
using lahbell::Distribution;
using lahbell::ExactRational;
using lahbell::MomentKind;

namespace {

ExactRational q(const char* text) { return ExactRational::parse(text); }

mpq_class to_mpq(const ExactRational& value) { return value.raw(); }

// E[f(X)] summed from oracle masses.
mpq_class binomial_expectation(unsigned n, const mpq_class& p, const mpq_class& lambda,
                               unsigned power) {
  mpq_class sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    mpq_class term = oracle::binomial_mass(n, p, lambda, i);
    for (unsigned j = 0; j < power; ++j) term *= i;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("degenerate binomial masses follow the defining formula", "[binomial]") {
  for (unsigned n : {0u, 1u, 2u, 5u, 9u}) {
    for (const char* p : {"0", "1/3", "1/2", "9/10", "1"}) {
      for (const char* lambda : {"0", "1/4", "2/5", "3/7"}) {
        if (lahbell::degenerate_falling_factorial(1, n, q(lambda)).is_zero()) continue;
        const DegenerateBinomial d(n, q(p), q(lambda));
        mpq_class total = 0;
        for (unsigned i = 0; i <= n; ++i) {
          const mpq_class expected = oracle::binomial_mass(n, to_mpq(q(p)), to_mpq(q(lambda)), i);
          CHECK(to_mpq(lahbell::db_pmf(d, i)) == expected);
          total += expected;
        }
        CHECK(total == 1);
        CHECK(lahbell::db_pmf(d, n + 1) == 0);
      }
    }
  }
}

TEST_CASE("degenerate binomial parameter checks", "[binomial]") {
  CHECK_THROWS_AS(DegenerateBinomial(3, q("3/2")), lahbell::DomainError);
  CHECK_THROWS_AS(DegenerateBinomial(3, q("-1/2")), lahbell::DomainError);
  CHECK_THROWS_AS(DegenerateBinomial(3, q("1/2"), 1), lahbell::DomainError);
  CHECK_THROWS_AS(DegenerateBinomial(3, q("1/2"), q("-1/4")), lahbell::DomainError);
  CHECK_THROWS_AS(DegenerateBinomial(3, q("1/2"), q("1/2")), lahbell::DomainError);
  CHECK_NOTHROW(DegenerateBinomial(2, q("1/2"), q("1/2")));
}

TEST_CASE("signed-mass witness", "[binomial][signed]") {
  const DegenerateBinomial d(3, q("1/10"), q("2/5"));
  CHECK(lahbell::db_pmf(d, 2) == q("-27/40"));
  ExactRational total(0);
  for (unsigned i = 0; i <= 3; ++i) total += lahbell::db_pmf(d, i);
  CHECK(total == 1);
  const auto support = lahbell::analyze_support(d);
  CHECK(support.finite);
  CHECK(support.cutoff == 3u);
  CHECK_FALSE(support.all_nonnegative);
  REQUIRE_FALSE(support.negative_indices.empty());
  CHECK(support.negative_indices.front() == 2);
}

TEST_CASE("degenerate binomial mean and variance against brute force", "[binomial][moments]") {
  for (unsigned n = 0; n <= 12; ++n) {
    for (const char* p : {"1/3", "1/2", "4/5"}) {
      for (const char* lambda : {"0", "1/4", "2/5", "3/11"}) {
        if (lahbell::degenerate_falling_factorial(1, n, q(lambda)).is_zero()) continue;
        INFO("n=" << n << " p=" << p << " lambda=" << lambda);
        const DegenerateBinomial d(n, q(p), q(lambda));
        const mpq_class m1 = binomial_expectation(n, to_mpq(q(p)), to_mpq(q(lambda)), 1);
        const mpq_class m2 = binomial_expectation(n, to_mpq(q(p)), to_mpq(q(lambda)), 2);
        CHECK(to_mpq(lahbell::db_mean(d)) == m1);
        CHECK(to_mpq(lahbell::db_variance(d)) == m2 - m1 * m1);
        CHECK(to_mpq(lahbell::db_raw_moment(d, 2)) == m2);
      }
    }
  }
}

TEST_CASE("classical binomial moments", "[binomial][moments]") {
  const DegenerateBinomial d(10, q("1/3"));
  CHECK(lahbell::db_mean(d) == q("10/3"));
  CHECK(lahbell::db_variance(d) == q("20/9"));
}

TEST_CASE("degenerate binomial approaches the classical mean", "[binomial][moments]") {
  const DegenerateBinomial d(10, q("1/3"), q("1/1000000"));
  CHECK(std::fabs(lahbell::db_mean(d).to_double() - 10.0 / 3.0) < 1e-4);
}

TEST_CASE("MGF derivatives recover the moments", "[binomial][moments]") {
  const DegenerateBinomial d(4, q("1/3"), q("1/5"));
  auto mgf = [&](double t) { return lahbell::db_mgf_eval(d, t); };
  CHECK(mgf(0) == Catch::Approx(1.0));
  CHECK(oracle::central_difference(mgf, 0, 1e-5) ==
        Catch::Approx(lahbell::db_mean(d).to_double()).epsilon(1e-7));
  auto derivative = [&](double t) { return oracle::central_difference(mgf, t, 1e-4); };
  CHECK(oracle::central_difference(derivative, 0, 1e-4) ==
        Catch::Approx(lahbell::db_raw_moment(d, 2).to_double()).epsilon(1e-5));
  const DegenerateBinomial classical(3, q("1/2"));
  CHECK(lahbell::db_mgf_eval(classical, std::log(2.0)) == Catch::Approx(27.0 / 8.0));
}

TEST_CASE("degenerate Poisson masses with finite support", "[poisson]") {
  for (unsigned m = 2; m <= 12; ++m) {
    for (const char* alpha : {"1/2", "1", "3"}) {
      const DegeneratePoisson d(q(alpha), ExactRational(lahbell::BigInt(1), lahbell::BigInt(m)));
      REQUIRE(d.finite_support());
      CHECK(d.support_cutoff() == m);
      const auto masses = lahbell::exact_masses(d);
      REQUIRE(masses.size() == m + 1);
      mpq_class total = 0;
      for (unsigned i = 0; i <= m; ++i) {
        const mpq_class expected = oracle::poisson_mass_finite(to_mpq(q(alpha)), m, i);
        CHECK(to_mpq(masses[i]) == expected);
        CHECK(to_mpq(lahbell::dp_pmf(d, i).exact()) == expected);
        total += expected;
      }
      CHECK(total == 1);
      CHECK(lahbell::dp_pmf(d, m + 1).exact() == 0);
      CHECK(lahbell::analyze_support(d).all_nonnegative);
    }
  }
}

TEST_CASE("degenerate Poisson hand-computed case", "[poisson]") {
  const DegeneratePoisson d(1, q("1/2"));
  CHECK(lahbell::exact_masses(d) == std::vector<ExactRational>{q("4/9"), q("4/9"), q("1/9")});
  const auto [mean, variance] = lahbell::dp_mean_variance(d);
  CHECK(mean == q("2/3"));
  CHECK(variance == q("4/9"));
  CHECK(lahbell::poisson_moment_closed_form(d, MomentKind::kRising, 2) == q("14/9"));
  CHECK(lahbell::pgf_eval(d, q("1/2")).exact() == q("16/9"));
  CHECK(lahbell::pgf_direct(d, q("1/2")).exact() == q("16/9"));
}

TEST_CASE("degenerate Poisson parameter checks", "[poisson]") {
  CHECK_THROWS_AS(DegeneratePoisson(0), lahbell::DomainError);
  CHECK_THROWS_AS(DegeneratePoisson(-1), lahbell::DomainError);
  CHECK_THROWS_AS(DegeneratePoisson(1, 1), lahbell::DomainError);
  CHECK_THROWS_AS(DegeneratePoisson(3, q("2/5")), lahbell::DomainError);
  CHECK_NOTHROW(DegeneratePoisson(5, q("1/2")));
  CHECK(DegeneratePoisson(2).classical());
}

TEST_CASE("degenerate Poisson with non-integer 1/lambda has signed masses", "[poisson][signed]") {
  const DegeneratePoisson d(1, q("2/5"));
  CHECK_FALSE(d.finite_support());
  CHECK_FALSE(lahbell::dp_pmf(d, 2).is_exact());
  CHECK(lahbell::dp_pmf(d, 3).approx() > 0);
  CHECK(lahbell::dp_pmf(d, 4).approx() < 0);
  const auto support = lahbell::analyze_support(d, 10);
  CHECK_FALSE(support.finite);
  CHECK_FALSE(support.all_nonnegative);
  REQUIRE_FALSE(support.negative_indices.empty());
  CHECK(support.negative_indices.front() == 4);
  CHECK_THROWS_AS(lahbell::exact_masses(d), std::invalid_argument);
  const auto witness_only = lahbell::analyze_support(d, 0);
  CHECK(witness_only.negative_indices == std::vector<unsigned>{4});
}

TEST_CASE("degenerate Poisson exact moments match closed forms", "[poisson][moments]") {
  for (unsigned m = 2; m <= 10; ++m) {
    const ExactRational lambda(lahbell::BigInt(1), lahbell::BigInt(m));
    for (const char* alpha : {"1/2", "1"}) {
      const DegeneratePoisson d(q(alpha), lambda);
      const auto [mean, variance] = lahbell::dp_mean_variance(d);
      const ExactRational m1 = lahbell::direct_moment(d, MomentKind::kRaw, 1).exact();
      const ExactRational m2 = lahbell::direct_moment(d, MomentKind::kRaw, 2).exact();
      CHECK(m1 == mean);
      CHECK(m2 - m1 * m1 == variance);
      for (unsigned order = 0; order <= 8; ++order) {
        INFO("m=" << m << " alpha=" << alpha << " order=" << order);
        const ExactRational rising = lahbell::direct_moment(d, MomentKind::kRising, order).exact();
        CHECK(rising == lahbell::poisson_moment_closed_form(d, MomentKind::kRising, order));
        CHECK(rising == lahbell::double_stirling_rising_moment(d, order));
        CHECK(to_mpq(rising) == oracle::degenerate_lah_bell_value(order, to_mpq(q(alpha)),
                                                                  to_mpq(lambda)));
        CHECK(lahbell::direct_moment(d, MomentKind::kRaw, order).exact() ==
              lahbell::poisson_moment_closed_form(d, MomentKind::kRaw, order));
        CHECK(lahbell::direct_moment(d, MomentKind::kFalling, order).exact() ==
              lahbell::poisson_moment_closed_form(d, MomentKind::kFalling, order));
      }
    }
  }
}

TEST_CASE("classical Poisson series moments", "[poisson][moments]") {
  for (const char* text : {"1/2", "1", "2", "5"}) {
    const DegeneratePoisson d(q(text));
    const double alpha = d.alpha().to_double();
    for (unsigned m = 1; m <= 8; ++m) {
      INFO("alpha=" << alpha << " m=" << m);
      const double rising = lahbell::direct_moment(d, MomentKind::kRising, m).approx();
      const long double reference = oracle::poisson_expectation(alpha, [m](unsigned i) {
        long double v = 1;
        for (unsigned j = 0; j < m; ++j) v *= i + j;
        return v;
      });
      CHECK(std::fabs(rising - static_cast<double>(reference)) <= 1e-8 * std::max(1.0L, reference));
      CHECK(std::fabs(rising - lahbell::lah_bell_polynomial(m)(d.alpha()).to_double()) <=
            1e-8 * std::max(1.0, rising));
      const double falling = lahbell::direct_moment(d, MomentKind::kFalling, m).approx();
      CHECK(falling == Catch::Approx(std::pow(alpha, m)).epsilon(1e-12));
    }
  }
  CHECK(lahbell::raw_moment(DegeneratePoisson(2), 3).exact() == 22);
  CHECK(lahbell::falling_factorial_moment(DegeneratePoisson(2), 3).exact() == 8);
  CHECK(lahbell::direct_moment(DegeneratePoisson(2), MomentKind::kRaw, 0).exact() == 1);
}

TEST_CASE("series that cannot settle within budget report it", "[poisson][moments]") {
  lahbell::SeriesOptions tight;
  tight.term_budget = 3;
  CHECK_THROWS_AS(lahbell::direct_moment(DegeneratePoisson(5), MomentKind::kRaw, 2, tight),
                  lahbell::ConvergenceError);
}

TEST_CASE("PGF closed form against the direct sum", "[pgf]") {
  const std::vector<const char*> ts = {"-1/2", "-1/4", "0", "1/4", "1/2"};
  for (const char* t : ts) {
    for (unsigned m : {2u, 3u, 7u}) {
      const DegeneratePoisson d(1, ExactRational(lahbell::BigInt(1), lahbell::BigInt(m)));
      CHECK(lahbell::pgf_eval(d, q(t)).exact() == lahbell::pgf_direct(d, q(t)).exact());
    }
    const DegeneratePoisson classical(2);
    CHECK(lahbell::pgf_eval(classical, q(t)).approx() ==
          Catch::Approx(lahbell::pgf_direct(classical, q(t)).approx()).epsilon(1e-10));
    const DegeneratePoisson infinite(1, q("2/5"));
    CHECK(lahbell::pgf_eval(infinite, q(t)).approx() ==
          Catch::Approx(lahbell::pgf_direct(infinite, q(t)).approx()).epsilon(1e-10));
    const DegenerateBinomial binomial(4, q("1/3"), q("1/5"));
    CHECK(lahbell::pgf_eval(binomial, q(t)).exact() == lahbell::pgf_direct(binomial, q(t)).exact());
  }
  CHECK_THROWS_AS(lahbell::pgf_eval(DegeneratePoisson(1), 1), lahbell::DomainError);
}

TEST_CASE("PGF Taylor coefficients are rising moments over n!", "[pgf]") {
  // Forward differences of the exact PGF at small t would lose exactness, so
  // compare the rational function ((1+lambda alpha z)/(1+lambda alpha))^m,
  // z = 1/(1-t), expanded by the binomial theorem.
  const unsigned m = 4;
  const ExactRational lambda(lahbell::BigInt(1), lahbell::BigInt(m));
  const DegeneratePoisson d(1, lambda);
  const ExactRational c = lambda / (ExactRational(1) + lambda);
  // (1 + c u)^m with u = t/(1-t); u^j has coefficient C(n-1, j-1) at t^n.
  for (unsigned n = 0; n <= 8; ++n) {
    ExactRational coefficient = n == 0 ? ExactRational(1) : ExactRational(0);
    for (unsigned j = 1; j <= std::min(n, m) && n > 0; ++j) {
      coefficient += ExactRational(lahbell::binomial_coefficient(m, j)) * c.pow(j) *
                     ExactRational(lahbell::binomial_coefficient(n - 1, j - 1));
    }
    CHECK(coefficient * ExactRational(lahbell::factorial(n)) ==
          lahbell::direct_moment(d, MomentKind::kRising, n).exact());
  }
}

TEST_CASE("moment kinds parse and print", "[moments]") {
  CHECK(lahbell::parse_moment_kind("rising") == MomentKind::kRising);
  CHECK_FALSE(lahbell::parse_moment_kind("central").has_value());
  CHECK(lahbell::to_string(MomentKind::kFalling) == "falling");
  CHECK(lahbell::moment_function(MomentKind::kRising, 3, 2) == 24);
  CHECK(lahbell::moment_function(MomentKind::kFalling, 3, 2) == 0);
  CHECK(lahbell::moment_function(MomentKind::kRaw, 3, 2) == 8);
}
