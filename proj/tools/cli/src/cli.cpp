#include "lahbell/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lahbell/lahbell.hpp"

namespace lahbell::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TableOptions {
  std::string kind;
  unsigned n_max = 10;
};

struct PolyOptions {
  std::string family;
  unsigned n = 0;
  std::optional<std::string> lambda;
  std::optional<std::string> eval_at;
};

struct VerifyOptions {
  std::string suite = "all";
  unsigned n_max = 12;
  unsigned trials = 20;
};

struct SimulateOptions {
  std::string dist;
  std::optional<std::string> alpha;
  std::optional<std::string> lambda;
  std::optional<std::string> p;
  std::optional<unsigned> n;
  std::string moment = "raw";
  unsigned order = 1;
  unsigned workers = 1;
};

struct CommonOptions {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  double z_threshold = kDefaultZThreshold;
  unsigned cap = kDefaultCap;
};

ExactRational parse_flag(const std::string& flag, const std::string& text) {
  try {
    return ExactRational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": expected a rational \"a/b\", got \"" + text + "\"");
  }
}

void check_cap(const std::string& flag, unsigned value, unsigned cap) {
  if (value > cap) {
    throw CapError(flag + " " + std::to_string(value) + " exceeds the cap " + std::to_string(cap) +
                   " (raise it with --cap)");
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Arbitrary-size integers are written as bare JSON numbers, so rows are
// serialized by hand rather than through the json library.
std::string join(std::span<const BigInt> values) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) text += ',';
    text += to_string(values[i]);
  }
  return text;
}

int cmd_table(const TableOptions& options, const CommonOptions& common, std::ostream& out) {
  check_cap("--n-max", options.n_max, common.cap);
  const bool csv = common.format == "csv";
  if (options.kind == "lahbell-numbers") {
    std::vector<BigInt> values;
    for (unsigned n = 0; n <= options.n_max; ++n) values.push_back(lah_bell_number(n));
    if (csv) {
      for (const auto& value : values) out << to_string(value) << '\n';
    } else {
      out << '[' << join(values) << "]\n";
    }
    return kExitOk;
  }
  const TriangleCache& triangle = options.kind == "lah"  ? lah_triangle()
                                  : options.kind == "s1" ? stirling1_triangle()
                                                         : stirling2_triangle();
  if (csv) {
    for (unsigned n = 0; n <= options.n_max; ++n) out << join(triangle.row(n)) << '\n';
    return kExitOk;
  }
  out << '[';
  for (unsigned n = 0; n <= options.n_max; ++n) {
    if (n > 0) out << ',';
    out << '[' << join(triangle.row(n)) << ']';
  }
  out << "]\n";
  return kExitOk;
}

int cmd_poly(const PolyOptions& options, const CommonOptions& common, std::ostream& out) {
  check_cap("--n", options.n, common.cap);
  const bool degenerate = options.family == "dbell" || options.family == "dlahbell";
  if (degenerate && !options.lambda) {
    throw UsageError("family " + options.family + " requires --lambda");
  }
  if (!degenerate && options.lambda) {
    throw UsageError("family " + options.family + " does not take --lambda");
  }
  std::optional<ExactRational> lambda;
  if (options.lambda) lambda = parse_flag("--lambda", *options.lambda);

  RationalPolynomial polynomial;
  if (options.family == "bell") {
    polynomial = bell_polynomial(options.n);
  } else if (options.family == "lahbell") {
    polynomial = lah_bell_polynomial(options.n);
  } else if (options.family == "dbell") {
    polynomial = degenerate_bell_polynomial(options.n, *lambda);
  } else {
    polynomial = degenerate_lah_bell_polynomial(options.n, *lambda);
  }

  std::optional<ExactRational> at;
  std::optional<ExactRational> value;
  if (options.eval_at) {
    at = parse_flag("--eval", *options.eval_at);
    value = degenerate ? evaluate_substituted(polynomial, *at, *lambda) : polynomial(*at);
  }
  const std::string variable = polynomial.variable() == Variable::kX ? "X" : "Y";

  if (common.format == "csv") {
    out << "family," << options.family << '\n';
    out << "n," << options.n << '\n';
    if (lambda) out << "lambda," << lambda->to_string() << '\n';
    out << "variable," << variable << '\n';
    out << "coefficients," << csv_field(polynomial.to_string()) << '\n';
    if (value) {
      out << "at," << at->to_string() << '\n';
      out << "value," << value->to_string() << '\n';
    }
    return kExitOk;
  }
  Json doc;
  doc["family"] = options.family;
  doc["n"] = options.n;
  if (lambda) doc["lambda"] = lambda->to_string();
  doc["variable"] = variable;
  Json coefficients = Json::array();
  for (const auto& c : polynomial.coefficients()) coefficients.push_back(c.to_string());
  if (coefficients.empty()) coefficients.push_back("0");
  doc["coefficients"] = coefficients;
  if (value) {
    doc["at"] = at->to_string();
    doc["value"] = value->to_string();
  }
  out << doc.dump() << '\n';
  return kExitOk;
}

Json report_json(const VerificationReport& report) {
  Json doc;
  doc["identity"] = report.identity;
  Json params = Json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  doc["params"] = params;
  doc["mode"] = to_string(report.mode);
  doc["lhs"] = report.lhs;
  doc["rhs"] = report.rhs;
  doc["discrepancy"] = report.discrepancy;
  doc["status"] = to_string(report.status);
  if (report.seed) doc["seed"] = *report.seed;
  if (report.samples) doc["samples"] = *report.samples;
  return doc;
}

std::string report_csv(const VerificationReport& report) {
  std::string params;
  for (const auto& [name, value] : report.params) {
    if (!params.empty()) params += ';';
    params += name + "=" + value;
  }
  std::string line = csv_field(report.identity) + ',' + csv_field(params) + ',' +
                     to_string(report.mode) + ',' + csv_field(report.lhs) + ',' +
                     csv_field(report.rhs) + ',' + csv_field(report.discrepancy) + ',' +
                     to_string(report.status) + ',';
  if (report.seed) line += std::to_string(*report.seed);
  line += ',';
  if (report.samples) line += std::to_string(*report.samples);
  return line;
}

int cmd_verify(const VerifyOptions& options, const CommonOptions& common, std::ostream& out,
               std::ostream& err) {
  check_cap("--n-max", options.n_max, common.cap);
  const auto suite = parse_suite(options.suite);
  if (!suite) throw UsageError("unknown suite " + options.suite);
  SuiteOptions suite_options;
  suite_options.n_max = options.n_max;
  suite_options.seed = common.seed;
  suite_options.trials = options.trials;
  suite_options.samples = common.samples;
  suite_options.z_threshold = common.z_threshold;

  const auto reports = run_suite(*suite, suite_options);
  const bool csv = common.format == "csv";
  if (csv) out << "identity,params,mode,lhs,rhs,discrepancy,status,seed,samples\n";
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& report : reports) {
    out << (csv ? report_csv(report) : report_json(report).dump()) << '\n';
    switch (report.status) {
      case VerificationStatus::kPass:
        ++passed;
        break;
      case VerificationStatus::kFail:
        ++failed;
        break;
      case VerificationStatus::kSkipped:
        ++skipped;
        break;
    }
  }
  err << "verify " << options.suite << ": " << passed << " passed, " << failed << " failed, "
      << skipped << " skipped\n";
  return failed == 0 ? kExitOk : kExitIdentityFailure;
}

Distribution build_distribution(const SimulateOptions& options) {
  auto need = [](const auto& flag, const char* name, const std::string& dist) {
    if (!flag) throw UsageError("--dist " + dist + " requires " + name);
  };
  auto forbid = [](const auto& flag, const char* name, const std::string& dist) {
    if (flag) throw UsageError("--dist " + dist + " does not take " + name);
  };
  const std::string& dist = options.dist;
  if (dist == "poisson" || dist == "dpoisson") {
    need(options.alpha, "--alpha", dist);
    forbid(options.p, "--p", dist);
    forbid(options.n, "--n", dist);
    const ExactRational alpha = parse_flag("--alpha", *options.alpha);
    if (dist == "poisson") {
      forbid(options.lambda, "--lambda", dist);
      return DegeneratePoisson(alpha);
    }
    need(options.lambda, "--lambda", dist);
    return DegeneratePoisson(alpha, parse_flag("--lambda", *options.lambda));
  }
  need(options.n, "--n", dist);
  need(options.p, "--p", dist);
  forbid(options.alpha, "--alpha", dist);
  const ExactRational p = parse_flag("--p", *options.p);
  if (dist == "binomial") {
    forbid(options.lambda, "--lambda", dist);
    return DegenerateBinomial(*options.n, p);
  }
  need(options.lambda, "--lambda", dist);
  return DegenerateBinomial(*options.n, p, parse_flag("--lambda", *options.lambda));
}

int cmd_simulate(const SimulateOptions& options, const CommonOptions& common, std::ostream& out,
                 std::ostream& err) {
  if (options.n) check_cap("--n", *options.n, common.cap);
  check_cap("--order", options.order, common.cap);
  const Distribution distribution = build_distribution(options);
  const auto kind = parse_moment_kind(options.moment);
  if (!kind) throw UsageError("unknown moment kind " + options.moment);

  const MomentEstimate estimate = estimate_moment_partitioned(
      distribution, *kind, options.order, common.samples, common.seed, options.workers);
  const auto target = exact_moment_target(distribution, *kind, options.order);

  std::optional<double> z;
  std::optional<bool> within;
  // Without a standard error (fewer than two samples) there is no z-test.
  if (target && estimate.standard_error) {
    z = z_score(estimate, target->to_double());
    within = std::fabs(*z) <= common.z_threshold;
  }
  const std::string estimate_text = format_decimal(estimate.estimate);
  const std::string error_text =
      estimate.standard_error ? format_decimal(*estimate.standard_error) : std::string();

  if (common.format == "csv") {
    out << "distribution,moment,order,samples,seed,workers,estimate,standard_error,target,z,"
           "z_threshold,status\n";
    out << csv_field(describe(distribution)) << ',' << to_string(*kind) << ',' << options.order
        << ',' << common.samples << ',' << common.seed << ',' << options.workers << ','
        << estimate_text << ',' << error_text << ',' << (target ? target->to_string() : "") << ','
        << (z ? format_decimal(*z) : "") << ',' << format_decimal(common.z_threshold) << ','
        << (within ? (*within ? "PASS" : "FAIL") : "") << '\n';
  } else {
    Json doc;
    doc["distribution"] = describe(distribution);
    doc["moment"] = to_string(*kind);
    doc["order"] = options.order;
    doc["samples"] = common.samples;
    doc["seed"] = common.seed;
    doc["workers"] = options.workers;
    doc["estimate"] = estimate_text;
    if (estimate.standard_error) doc["standard_error"] = error_text;
    if (target) doc["target"] = target->to_string();
    if (z) {
      doc["z"] = format_decimal(*z);
      doc["z_threshold"] = format_decimal(common.z_threshold);
      doc["status"] = *within ? "PASS" : "FAIL";
    }
    out << doc.dump() << '\n';
  }
  if (within && !*within) {
    err << "estimate is more than " << format_decimal(common.z_threshold)
        << " standard errors from the exact target\n";
    return kExitIdentityFailure;
  }
  return kExitOk;
}

void add_format(CLI::App* command, CommonOptions& common) {
  command->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_cap(CLI::App* command, CommonOptions& common) {
  command->add_option("--cap", common.cap, "Largest accepted index")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lah-Bell polynomials, degenerate distributions and identity checks", "lahbell"};
  app.require_subcommand(1);
  CommonOptions common;

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Print a number triangle or sequence");
  table_cmd->add_option("kind,--kind", table.kind, "lah | s1 | s2 | lahbell-numbers")
      ->required()
      ->check(CLI::IsMember({"lah", "s1", "s2", "lahbell-numbers"}));
  table_cmd->add_option("--n-max", table.n_max, "Last row")->capture_default_str();
  add_format(table_cmd, common);
  add_cap(table_cmd, common);

  PolyOptions poly;
  auto* poly_cmd = app.add_subcommand("poly", "Print a polynomial and optionally evaluate it");
  poly_cmd->add_option("family,--family", poly.family, "bell | lahbell | dbell | dlahbell")
      ->required()
      ->check(CLI::IsMember({"bell", "lahbell", "dbell", "dlahbell"}));
  poly_cmd->add_option("--n", poly.n, "Degree index")->required();
  poly_cmd->add_option("--lambda", poly.lambda, "Degeneracy parameter a/b");
  poly_cmd->add_option("--eval", poly.eval_at, "Evaluation point a/b");
  add_format(poly_cmd, common);
  add_cap(poly_cmd, common);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite");
  verify_cmd
      ->add_option("suite,--suite", verify.suite, "all | stirling | lahbell | dbinomial | dpoisson | pgf")
      ->check(CLI::IsMember({"all", "stirling", "lahbell", "dbinomial", "dpoisson", "pgf"}))
      ->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max, "Largest index")->capture_default_str();
  verify_cmd->add_option("--trials", verify.trials, "Random parameter draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", common.seed, "Master seed")->capture_default_str();
  verify_cmd->add_option("--samples", common.samples, "Monte Carlo samples per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--z-threshold", common.z_threshold, "Largest accepted |z|")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(verify_cmd, common);
  add_cap(verify_cmd, common);

  SimulateOptions simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Estimate a moment by sampling");
  simulate_cmd->add_option("--dist", simulate.dist, "poisson | dpoisson | binomial | dbinomial")
      ->required()
      ->check(CLI::IsMember({"poisson", "dpoisson", "binomial", "dbinomial"}));
  simulate_cmd->add_option("--alpha", simulate.alpha, "Poisson rate a/b");
  simulate_cmd->add_option("--lambda", simulate.lambda, "Degeneracy parameter a/b");
  simulate_cmd->add_option("--p", simulate.p, "Success probability a/b");
  simulate_cmd->add_option("--n", simulate.n, "Number of trials");
  simulate_cmd->add_option("--moment", simulate.moment, "raw | falling | rising")
      ->check(CLI::IsMember({"raw", "falling", "rising"}))
      ->capture_default_str();
  simulate_cmd->add_option("--order", simulate.order, "Moment order")->capture_default_str();
  simulate_cmd->add_option("--samples", common.samples, "Sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate_cmd->add_option("--seed", common.seed, "Master seed")->capture_default_str();
  simulate_cmd->add_option("--workers", simulate.workers, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  simulate_cmd->add_option("--z-threshold", common.z_threshold, "Largest accepted |z|")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(simulate_cmd, common);
  add_cap(simulate_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, common, out);
    if (*poly_cmd) return cmd_poly(poly, common, out);
    if (*verify_cmd) return cmd_verify(verify, common, out, err);
    return cmd_simulate(simulate, common, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const SignedMassError& e) {
    err << "error: " << e.what() << " (first negative index " << e.first_negative_index()
        << ")\n";
    return kExitSignedMass;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluationDomain;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluationDomain;
  } catch (const TailError& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluationDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lahbell::cli
