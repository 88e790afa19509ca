#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lahbell/rational.hpp"
#include "lahbell/sampling.hpp"

namespace lahbell {

/// kExact compares rationals for literal equality. kNumeric compares a
/// truncated series against its target within an absolute tolerance.
/// kStatistical compares a Monte Carlo estimate through its z-score.
enum class VerificationMode { kExact, kNumeric, kStatistical };
enum class VerificationStatus { kPass, kFail, kSkipped };

std::string to_string(VerificationMode mode);
std::string to_string(VerificationStatus status);

struct VerificationReport {
  std::string identity;
  /// Inputs as canonical rational strings, plus "tolerance" or "z_threshold"
  /// for non-exact modes.
  std::map<std::string, std::string> params;
  VerificationMode mode = VerificationMode::kExact;
  std::string lhs;
  std::string rhs;
  /// "0" for exact equality; |lhs - rhs| for numeric checks; |z| for
  /// statistical ones.
  std::string discrepancy;
  VerificationStatus status = VerificationStatus::kFail;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

using ParameterSet = std::map<std::string, ExactRational, std::less<>>;

inline constexpr double kSeriesTolerance = 1e-8;
inline constexpr double kLimitTolerance = 1e-4;
inline constexpr double kDefaultZThreshold = 5.0;

/// Runs one registered identity. Statistical identities draw `samples`
/// variates from `stream`; the other modes ignore both. Throws
/// UnknownIdentityError for unregistered tags, std::invalid_argument for
/// missing or malformed parameters and DomainError for parameters outside a
/// distribution's domain.
VerificationReport verify_identity(std::string_view identity, const ParameterSet& params,
                                   std::uint64_t samples, double z_threshold,
                                   SamplerStream& stream);

std::vector<std::string> registered_identities();

enum class Suite { kAll, kStirling, kLahBell, kDBinomial, kDPoisson, kPgf };

std::optional<Suite> parse_suite(std::string_view text);
std::string to_string(Suite suite);

struct SuiteInstance {
  std::string identity;
  ParameterSet params;
};

struct SuiteOptions {
  unsigned n_max = 12;
  std::uint64_t seed = 0;
  /// Number of random parameter sets drawn for randomised checks.
  unsigned trials = 20;
  std::uint64_t samples = 100000;
  double z_threshold = kDefaultZThreshold;
};

/// Deterministic list of identity instances for a suite.
std::vector<SuiteInstance> suite_instances(Suite suite, const SuiteOptions& options);

/// Runs every instance; instance i samples from SamplerStream(seed, i).
std::vector<VerificationReport> run_suite(Suite suite, const SuiteOptions& options);

}  // namespace lahbell
