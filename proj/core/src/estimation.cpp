#include "lahbell/estimation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lahbell {

namespace {

// Welford accumulator with Chan et al. merging.
struct RunningMoments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const RunningMoments& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(count + other.count);
    const double delta = other.mean - mean;
    mean += delta * static_cast<double>(other.count) / total;
    m2 += other.m2 + delta * delta * static_cast<double>(count) *
                         static_cast<double>(other.count) / total;
    count += other.count;
  }
};

RunningMoments accumulate(const InverseCdfSampler& sampler, MomentKind kind, unsigned order,
                          std::uint64_t samples, SamplerStream& stream) {
  RunningMoments moments;
  for (std::uint64_t s = 0; s < samples; ++s) {
    moments.add(moment_function_approx(kind, order, sampler.draw(stream)));
  }
  return moments;
}

MomentEstimate finish(const RunningMoments& moments, MomentKind kind, unsigned order) {
  MomentEstimate estimate;
  estimate.estimate = moments.mean;
  estimate.sample_count = moments.count;
  estimate.kind = kind;
  estimate.order = order;
  if (moments.count >= 2) {
    const double variance = moments.m2 / static_cast<double>(moments.count - 1);
    estimate.standard_error = std::sqrt(variance / static_cast<double>(moments.count));
  }
  return estimate;
}

}  // namespace

MomentEstimate estimate_moment(const Distribution& distribution, MomentKind kind, unsigned order,
                               std::uint64_t samples, SamplerStream& stream) {
  if (samples == 0) throw std::invalid_argument("estimate_moment needs at least one sample");
  const InverseCdfSampler sampler(distribution);
  return finish(accumulate(sampler, kind, order, samples, stream), kind, order);
}

MomentEstimate estimate_moment_partitioned(const Distribution& distribution, MomentKind kind,
                                           unsigned order, std::uint64_t samples,
                                           std::uint64_t master_seed, unsigned workers) {
  if (samples == 0) throw std::invalid_argument("estimate_moment needs at least one sample");
  if (workers == 0) throw std::invalid_argument("estimate_moment needs at least one worker");
  const InverseCdfSampler sampler(distribution);
  std::vector<RunningMoments> partials(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t share = samples / workers + (w < samples % workers ? 1 : 0);
    threads.emplace_back([&, w, share] {
      SamplerStream stream(master_seed, w);
      partials[w] = accumulate(sampler, kind, order, share, stream);
    });
  }
  for (auto& thread : threads) thread.join();
  RunningMoments merged;
  for (const auto& partial : partials) merged.merge(partial);
  return finish(merged, kind, order);
}

double z_score(const MomentEstimate& estimate, double target) {
  const double difference = estimate.estimate - target;
  const double error = estimate.standard_error.value_or(0.0);
  if (error > 0.0) return difference / error;
  if (difference == 0.0) return 0.0;
  return difference > 0 ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
}

}  // namespace lahbell
