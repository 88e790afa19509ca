#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "lahbell/errors.hpp"
#include "lahbell/families.hpp"
#include "lahbell/polynomial.hpp"
#include "lahbell/triangles.hpp"
#include "oracles.hpp"

using lahbell::ExactRational;
using lahbell::RationalPolynomial;
using lahbell::Variable;

namespace {

ExactRational q(const char* text) { return ExactRational::parse(text); }

ExactRational from(const mpq_class& value) {
  return ExactRational(lahbell::BigInt(value.get_num()), lahbell::BigInt(value.get_den()));
}

mpq_class to_mpq(const ExactRational& value) { return value.raw(); }

const std::vector<const char*> kPoints = {"1", "2", "1/2", "-1/3", "7/5"};
const std::vector<const char*> kLambdas = {"1/2", "1/3", "2/5", "1/7", "-1/4", "3"};

}  // namespace

TEST_CASE("polynomial arithmetic and trimming", "[polynomial]") {
  const RationalPolynomial p({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p.to_string() == "[1,2]");
  CHECK(RationalPolynomial().to_string() == "[0]");
  CHECK(RationalPolynomial().degree() == -1);
  const RationalPolynomial r({q("-1/2"), 1});
  CHECK((p * r).to_string() == "[-1/2,0,2]");
  CHECK((p + r).to_string() == "[1/2,3]");
  CHECK((p - p).is_zero());
  CHECK((p * q("1/2")).to_string() == "[1/2,1]");
  CHECK(p(q("3/4")) == q("5/2"));
  CHECK(p.coefficient(7) == 0);
  CHECK(RationalPolynomial::monomial(q("2/3"), 2).to_string() == "[0,0,2/3]");
}

TEST_CASE("polynomials in different variables do not mix", "[polynomial]") {
  const RationalPolynomial x({1, 1}, Variable::kX);
  const RationalPolynomial y({1, 1}, Variable::kY);
  CHECK_THROWS_AS(x + y, std::invalid_argument);
  CHECK_THROWS_AS(x * y, std::invalid_argument);
  CHECK_FALSE(x == y);
}

TEST_CASE("substituted variable", "[polynomial]") {
  CHECK(lahbell::substituted_variable(1, q("1/2")) == q("2/3"));
  CHECK(lahbell::substituted_variable(q("1/2"), 0) == q("1/2"));
  CHECK_THROWS_AS(lahbell::substituted_variable(-2, q("1/2")), lahbell::EvaluationError);
  const RationalPolynomial y({0, 1}, Variable::kY);
  CHECK_THROWS_AS(lahbell::evaluate_substituted(RationalPolynomial({0, 1}), 1, q("1/2")),
                  std::invalid_argument);
  CHECK(lahbell::evaluate_substituted(y, 1, q("1/2")) == q("2/3"));
}

TEST_CASE("Bell polynomials match the binomial recurrence", "[bell]") {
  for (unsigned n = 0; n <= 15; ++n) {
    for (const char* x : kPoints) {
      INFO("n=" << n << " x=" << x);
      CHECK(to_mpq(lahbell::bell_polynomial(n)(q(x))) == oracle::bell_value(n, to_mpq(q(x))));
    }
  }
  CHECK(lahbell::bell_polynomial(0).to_string() == "[1]");
  CHECK(lahbell::bell_polynomial(3).to_string() == "[0,1,3,1]");
}

TEST_CASE("Lah-Bell polynomials and numbers", "[lahbell]") {
  const std::vector<lahbell::BigInt> numbers = {1, 1, 3, 13, 73, 501, 4051, 37633, 394353};
  for (unsigned n = 0; n < numbers.size(); ++n) {
    CHECK(lahbell::lah_bell_number(n) == numbers[n]);
    unsigned long brute = 0;
    for (unsigned k = 0; k <= n; ++k) brute += oracle::count_ordered_list_partitions(n, k);
    CHECK(lahbell::lah_bell_number(n) == lahbell::BigInt(brute));
  }
  for (unsigned n = 0; n <= 18; ++n) {
    for (const char* x : kPoints) {
      INFO("n=" << n << " x=" << x);
      CHECK(to_mpq(lahbell::lah_bell_polynomial(n)(q(x))) == oracle::lah_bell_value(n, to_mpq(q(x))));
    }
  }
  CHECK(lahbell::lah_bell_polynomial(3)(2) == 44);
}

TEST_CASE("Lah-Bell series coefficients", "[lahbell]") {
  for (const char* x : kPoints) {
    const auto series = lahbell::lah_bell_series_coefficients(q(x), 20);
    REQUIRE(series.size() == 21);
    for (unsigned n = 0; n <= 20; ++n) {
      CHECK(to_mpq(series[n]) == oracle::lah_bell_value(n, to_mpq(q(x))));
    }
  }
  CHECK(lahbell::lah_bell_series_coefficients(1, 0) == std::vector<ExactRational>{1});
}

TEST_CASE("Stirling transforms turn Bell values into Lah-Bell values", "[lahbell]") {
  for (const char* x : kPoints) {
    std::vector<ExactRational> bell;
    for (unsigned k = 0; k <= 12; ++k) bell.push_back(lahbell::bell_polynomial(k)(q(x)));
    for (unsigned n = 0; n <= 12; ++n) {
      CHECK(lahbell::lahbell_from_bell(n, bell) == lahbell::lah_bell_polynomial(n)(q(x)));
    }
  }
}

TEST_CASE("signed Stirling weights annihilate the Bell basis down to monomials", "[bell]") {
  for (unsigned n = 0; n <= 12; ++n) {
    RationalPolynomial sum;
    for (unsigned k = 0; k <= n; ++k) {
      sum += lahbell::bell_polynomial(k) * ExactRational(lahbell::stirling1_signed(n, k));
    }
    CHECK(sum == RationalPolynomial::monomial(1, n));
  }
}

TEST_CASE("transforms reject short inputs", "[lahbell]") {
  const std::vector<ExactRational> values = {1, 2};
  CHECK_THROWS_AS(lahbell::lahbell_from_bell(2, values), lahbell::LengthError);
  CHECK_THROWS_AS(lahbell::bell_from_lahbell_degenerate(3, values), lahbell::LengthError);
  CHECK_THROWS_AS(lahbell::unsigned_stirling1_transform<ExactRational>(2, values),
                  lahbell::LengthError);
  CHECK(lahbell::unsigned_stirling1_transform<ExactRational>(1, values) == 2);
}

TEST_CASE("double Stirling coefficients are Lah numbers", "[lahbell]") {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned l = 0; l <= n; ++l) {
      CHECK(lahbell::double_stirling_coefficient(n, l) == lahbell::lah_number(n, l));
    }
  }
}

TEST_CASE("degenerate Bell polynomials match their generating function", "[degenerate]") {
  for (const char* lambda : kLambdas) {
    for (const char* x : {"1", "1/2", "3"}) {
      for (unsigned n = 0; n <= 10; ++n) {
        INFO("n=" << n << " x=" << x << " lambda=" << lambda);
        const auto p = lahbell::degenerate_bell_polynomial(n, q(lambda));
        CHECK(p.variable() == Variable::kY);
        CHECK(to_mpq(lahbell::evaluate_substituted(p, q(x), q(lambda))) ==
              oracle::degenerate_bell_value(n, to_mpq(q(x)), to_mpq(q(lambda))));
      }
    }
  }
}

TEST_CASE("degenerate Lah-Bell polynomials match their generating function", "[degenerate]") {
  for (const char* lambda : kLambdas) {
    for (const char* x : {"1", "1/2", "3"}) {
      for (unsigned n = 0; n <= 10; ++n) {
        INFO("n=" << n << " x=" << x << " lambda=" << lambda);
        const mpq_class expected =
            oracle::degenerate_lah_bell_value(n, to_mpq(q(x)), to_mpq(q(lambda)));
        CHECK(to_mpq(lahbell::evaluate_substituted(
                  lahbell::degenerate_lah_bell_polynomial(n, q(lambda)), q(x), q(lambda))) ==
              expected);
        CHECK(to_mpq(lahbell::evaluate_substituted(
                  lahbell::degenerate_lah_bell_polynomial_via_bell(n, q(lambda)), q(x),
                  q(lambda))) == expected);
      }
    }
  }
}

TEST_CASE("degenerate Lah-Bell hand-computed case", "[degenerate]") {
  const auto p = lahbell::degenerate_lah_bell_polynomial(2, q("1/2"));
  CHECK(p.to_string() == "[0,2,1/2]");
  CHECK(lahbell::evaluate_substituted(p, 1, q("1/2")) == q("14/9"));
  CHECK(lahbell::degenerate_lah_bell_polynomial(0, q("1/2")).to_string() == "[1]");
}

TEST_CASE("both degenerate Lah-Bell constructions agree coefficient-wise", "[degenerate]") {
  for (const char* lambda : kLambdas) {
    for (unsigned n = 0; n <= 12; ++n) {
      CHECK(lahbell::degenerate_lah_bell_polynomial(n, q(lambda)) ==
            lahbell::degenerate_lah_bell_polynomial_via_bell(n, q(lambda)));
    }
  }
}

TEST_CASE("degenerate families reduce to the classical ones at lambda = 0", "[degenerate]") {
  for (unsigned n = 0; n <= 10; ++n) {
    for (const char* x : kPoints) {
      CHECK(lahbell::evaluate_substituted(lahbell::degenerate_bell_polynomial(n, 0), q(x), 0) ==
            lahbell::bell_polynomial(n)(q(x)));
      CHECK(lahbell::evaluate_substituted(lahbell::degenerate_lah_bell_polynomial(n, 0), q(x), 0) ==
            lahbell::lah_bell_polynomial(n)(q(x)));
    }
  }
}

TEST_CASE("inverse transform recovers degenerate Bell values", "[degenerate]") {
  for (const char* lambda : kLambdas) {
    const ExactRational x = q("5/3");
    std::vector<ExactRational> lah;
    for (unsigned k = 0; k <= 10; ++k) {
      lah.push_back(lahbell::evaluate_substituted(
          lahbell::degenerate_lah_bell_polynomial(k, q(lambda)), x, q(lambda)));
    }
    for (unsigned n = 0; n <= 10; ++n) {
      CHECK(lahbell::bell_from_lahbell_degenerate(n, lah) ==
            from(oracle::degenerate_bell_value(n, to_mpq(x), to_mpq(q(lambda)))));
    }
  }
}

TEST_CASE("evaluation at the pole of the substitution fails", "[degenerate]") {
  const auto p = lahbell::degenerate_lah_bell_polynomial(2, q("1/2"));
  CHECK_THROWS_AS(lahbell::evaluate_substituted(p, -2, q("1/2")), lahbell::EvaluationError);
}
