#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "lahbell/cli/cli.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/sampling.hpp"
#include "lahbell/verify.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = lahbell::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> lines;
  std::istringstream stream(text);
  for (std::string line; std::getline(stream, line);) lines.push_back(nlohmann::json::parse(line));
  return lines;
}

}  // namespace

TEST_CASE("table output", "[cli][table]") {
  auto lah = invoke({"table", "lah", "--n-max", "3", "--format", "csv"});
  CHECK(lah.code == 0);
  CHECK(lah.out == "1\n0,1\n0,2,1\n0,6,6,1\n");
  auto numbers = invoke({"table", "lahbell-numbers", "--n-max", "4", "--format", "json"});
  CHECK(numbers.out == "[1,1,3,13,73]\n");
  auto s1 = invoke({"table", "s1", "--n-max", "0", "--format", "csv"});
  CHECK(s1.out == "1\n");
  auto s2 = invoke({"table", "--kind", "s2", "--n-max", "2"});
  CHECK(s2.out == "[[1],[0,1],[0,1,1]]\n");
  auto signed_s1 = invoke({"table", "s1", "--n-max", "3", "--format", "csv"});
  CHECK(signed_s1.out == "1\n0,1\n0,-1,1\n0,2,-3,1\n");
}

TEST_CASE("table cap and usage errors", "[cli][table]") {
  CHECK(invoke({"table", "lah", "--n-max", "201"}).code == lahbell::cli::kExitCapExceeded);
  CHECK(invoke({"table", "lah", "--n-max", "201", "--cap", "300"}).code == 0);
  CHECK(invoke({"table", "catalan"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"table", "lah", "--format", "xml"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"table", "lah", "--n-max", "-1"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("polynomial output", "[cli][poly]") {
  auto lah = json_lines(invoke({"poly", "lahbell", "--n", "3", "--eval", "2"}).out);
  REQUIRE(lah.size() == 1);
  CHECK(lah[0]["value"] == "44");
  CHECK(lah[0]["variable"] == "X");
  auto degenerate = json_lines(invoke({"poly", "dlahbell", "--n", "2", "--lambda", "1/2", "--eval", "1"}).out);
  CHECK(degenerate[0]["value"] == "14/9");
  CHECK(degenerate[0]["variable"] == "Y");
  CHECK(degenerate[0]["coefficients"] == nlohmann::json::array({"0", "2", "1/2"}));
  auto bell = invoke({"poly", "bell", "--n", "0", "--format", "csv"});
  CHECK(bell.out.find("coefficients,[1]\n") != std::string::npos);
}

TEST_CASE("polynomial errors map to exit codes", "[cli][poly]") {
  CHECK(invoke({"poly", "dbell", "--n", "2"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"poly", "bell", "--n", "2", "--lambda", "1/2"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"poly", "bell", "--n", "2", "--eval", "x"}).code == lahbell::cli::kExitUsage);
  const auto pole = invoke({"poly", "dlahbell", "--n", "2", "--lambda", "1/2", "--eval", "-2"});
  CHECK(pole.code == lahbell::cli::kExitEvaluationDomain);
  CHECK_FALSE(pole.err.empty());
  CHECK(invoke({"poly", "bell", "--n", "250"}).code == lahbell::cli::kExitCapExceeded);
}

TEST_CASE("verify stirling suite passes exactly", "[cli][verify]") {
  const auto result = invoke({"verify", "stirling", "--n-max", "12"});
  CHECK(result.code == 0);
  const auto reports = json_lines(result.out);
  REQUIRE_FALSE(reports.empty());
  for (const auto& report : reports) {
    CHECK(report["status"] == "PASS");
    CHECK(report["mode"] == "EXACT");
    CHECK(report["discrepancy"] == "0");
  }
}

TEST_CASE("verify dpoisson suite is exact for lambda = 1/m", "[cli][verify]") {
  const auto result = invoke({"verify", "dpoisson", "--n-max", "10", "--samples", "20000"});
  CHECK(result.code == 0);
  int exact_theorem_checks = 0;
  for (const auto& report : json_lines(result.out)) {
    CHECK(report["status"] == "PASS");
    const std::string identity = report["identity"];
    const std::string lambda = report["params"].value("lambda", "");
    if ((identity == "theorem7-rising" || identity == "theorem9-double-stirling") &&
        lambda.rfind("1/", 0) == 0) {
      CHECK(report["mode"] == "EXACT");
      ++exact_theorem_checks;
    }
  }
  CHECK(exact_theorem_checks > 0);
}

TEST_CASE("verify all passes and is reproducible", "[cli][verify]") {
  const auto first = invoke({"verify", "--n-max", "8", "--samples", "20000", "--seed", "3"});
  const auto second = invoke({"verify", "--n-max", "8", "--samples", "20000", "--seed", "3"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const auto csv = invoke({"verify", "pgf", "--format", "csv"});
  CHECK(csv.out.rfind("identity,params,mode,lhs,rhs,discrepancy,status,seed,samples\n", 0) == 0);
}

TEST_CASE("verify rejects bad flags", "[cli][verify]") {
  CHECK(invoke({"verify", "everything"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"verify", "--trials", "0"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"verify", "--n-max", "500"}).code == lahbell::cli::kExitCapExceeded);
}

TEST_CASE("simulate reports estimates against exact targets", "[cli][simulate]") {
  const auto rising = invoke({"simulate", "--dist", "poisson", "--alpha", "2", "--moment", "rising",
                              "--order", "3", "--samples", "200000", "--seed", "42"});
  CHECK(rising.code == 0);
  const auto doc = json_lines(rising.out).at(0);
  CHECK(doc["target"] == "44");
  CHECK(std::fabs(std::stod(doc["z"].get<std::string>())) <= 5);
  const auto mean = invoke({"simulate", "--dist", "dpoisson", "--alpha", "1", "--lambda", "1/2",
                            "--moment", "raw", "--order", "1", "--samples", "50000"});
  CHECK(json_lines(mean.out).at(0)["target"] == "2/3");
  const auto again = invoke({"simulate", "--dist", "dpoisson", "--alpha", "1", "--lambda", "1/2",
                             "--moment", "raw", "--order", "1", "--samples", "50000"});
  CHECK(mean.out == again.out);
  const auto parallel = invoke({"simulate", "--dist", "binomial", "--n", "6", "--p", "1/3",
                                "--samples", "30000", "--workers", "4", "--format", "csv"});
  CHECK(parallel.code == 0);
}

TEST_CASE("simulate error codes", "[cli][simulate]") {
  const auto signed_mass = invoke({"simulate", "--dist", "dbinomial", "--n", "3", "--p", "1/10",
                                   "--lambda", "2/5"});
  CHECK(signed_mass.code == lahbell::cli::kExitSignedMass);
  CHECK(signed_mass.err.find("index 2") != std::string::npos);
  CHECK(invoke({"simulate", "--dist", "poisson"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"simulate", "--dist", "dpoisson", "--alpha", "1"}).code == lahbell::cli::kExitUsage);
  CHECK(invoke({"simulate", "--dist", "binomial", "--n", "3", "--p", "3/2"}).code ==
        lahbell::cli::kExitUsage);
  CHECK(invoke({"simulate", "--dist", "poisson", "--alpha", "1", "--moment", "central"}).code ==
        lahbell::cli::kExitUsage);
}

TEST_CASE("verification report invariants", "[verify]") {
  lahbell::SamplerStream stream(0);
  const lahbell::ParameterSet inversion{{"n", 4}, {"m", 2}};
  const auto exact = lahbell::verify_identity("stirling-inversion", inversion, 1000, 5, stream);
  CHECK(exact.mode == lahbell::VerificationMode::kExact);
  CHECK(exact.status == lahbell::VerificationStatus::kPass);
  CHECK(exact.lhs == exact.rhs);
  CHECK(exact.params.at("n") == "4");

  const lahbell::ParameterSet signed_params{
      {"n", 3}, {"p", lahbell::ExactRational::parse("1/10")}, {"lambda", lahbell::ExactRational::parse("2/5")}};
  const auto skipped = lahbell::verify_identity("db-mean-mc", signed_params, 1000, 5, stream);
  CHECK(skipped.status == lahbell::VerificationStatus::kSkipped);
  CHECK(skipped.mode == lahbell::VerificationMode::kStatistical);
  const auto closed = lahbell::verify_identity("theorem5-mean", signed_params, 1000, 5, stream);
  CHECK(closed.status == lahbell::VerificationStatus::kPass);

  const auto statistical = lahbell::verify_identity("theorem2-rising", {{"alpha", 2}, {"m", 3}}, 20000, 5, stream);
  CHECK(statistical.params.at("z_threshold") == "5");
  CHECK(statistical.seed.has_value());
  CHECK(statistical.samples == 20000u);

  CHECK_THROWS_AS(lahbell::verify_identity("no-such-identity", {}, 10, 5, stream),
                  lahbell::UnknownIdentityError);
  CHECK_THROWS_AS(lahbell::verify_identity("stirling-inversion", {{"n", 4}}, 10, 5, stream),
                  std::invalid_argument);
  CHECK(lahbell::registered_identities().size() >= 30);
}
