#include "lahbell/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lahbell/errors.hpp"

namespace lahbell {

namespace {

void reject_signed_masses(const Distribution& distribution) {
  const SupportAnalysis analysis = analyze_support(distribution, 0);
  if (analysis.all_nonnegative) return;
  const unsigned index = analysis.negative_indices.front();
  std::string mass;
  if (const auto* binomial = std::get_if<DegenerateBinomial>(&distribution)) {
    mass = db_pmf(*binomial, index).to_string();
  } else {
    mass = dp_pmf(std::get<DegeneratePoisson>(distribution), index).to_string();
  }
  throw SignedMassError(index, mass);
}

std::vector<double> finite_table(const Distribution& distribution) {
  const auto masses = exact_masses(distribution);
  std::vector<double> cumulative;
  cumulative.reserve(masses.size());
  ExactRational running(0);
  for (const auto& mass : masses) {
    running += mass;
    cumulative.push_back(running.to_double());
  }
  if (running != ExactRational(1)) {
    throw std::logic_error("masses of " + describe(distribution) + " total " + running.to_string());
  }
  cumulative.back() = 1.0;
  return cumulative;
}

std::vector<double> classical_poisson_table(const DegeneratePoisson& poisson, double coverage,
                                            unsigned term_budget) {
  const long double alpha = poisson.alpha().to_long_double();
  const long double log_alpha = std::log(alpha);
  std::vector<double> cumulative;
  long double running = 0.0L;
  for (unsigned i = 0; i < term_budget; ++i) {
    const long double log_mass =
        -alpha + static_cast<long double>(i) * log_alpha - std::lgamma(static_cast<long double>(i) + 1);
    running += std::exp(log_mass);
    cumulative.push_back(static_cast<double>(running));
    if (running >= coverage) {
      cumulative.back() = 1.0;
      return cumulative;
    }
  }
  throw TailError("cumulative table for " + describe(Distribution(poisson)) +
                  " did not reach coverage within " + std::to_string(term_budget) + " entries");
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
  return splitmix64(splitmix64(master_seed) ^ splitmix64(~stream_index));
}

SamplerStream::SamplerStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      engine_(derive_stream_seed(master_seed, stream_index)) {}

std::uint64_t SamplerStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below needs a positive bound");
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

InverseCdfSampler::InverseCdfSampler(const Distribution& distribution, double coverage,
                                     unsigned term_budget) {
  reject_signed_masses(distribution);
  if (has_finite_support(distribution)) {
    cumulative_ = finite_table(distribution);
  } else {
    cumulative_ = classical_poisson_table(std::get<DegeneratePoisson>(distribution), coverage,
                                          term_budget);
  }
}

unsigned InverseCdfSampler::draw(SamplerStream& stream) const {
  const double u = stream.next_unit();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto index = static_cast<unsigned>(it - cumulative_.begin());
  return std::min(index, static_cast<unsigned>(cumulative_.size() - 1));
}

unsigned sample(const Distribution& distribution, SamplerStream& stream) {
  return InverseCdfSampler(distribution).draw(stream);
}

}  // namespace lahbell
