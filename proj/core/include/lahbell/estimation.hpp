#pragma once

#include <cstdint>
#include <optional>

#include "lahbell/distributions.hpp"
#include "lahbell/moments.hpp"
#include "lahbell/sampling.hpp"

namespace lahbell {

struct MomentEstimate {
  double estimate = 0.0;
  /// Reported only when sample_count >= 2.
  std::optional<double> standard_error;
  std::uint64_t sample_count = 0;
  MomentKind kind = MomentKind::kRaw;
  unsigned order = 0;
};

/// Sample mean of f(X) for f in {x^order, (x)_order, <x>_order} over
/// `samples` draws from `stream`, with its standard error. Throws
/// SignedMassError / TailError from the sampler.
MomentEstimate estimate_moment(const Distribution& distribution, MomentKind kind, unsigned order,
                               std::uint64_t samples, SamplerStream& stream);

/// The same estimate split across `workers` threads. Worker w draws from
/// SamplerStream(master_seed, w); partial results are merged in worker order,
/// so the result depends only on the seed, the worker count and the sample
/// count. With one worker it matches estimate_moment on stream (seed, 0).
MomentEstimate estimate_moment_partitioned(const Distribution& distribution, MomentKind kind,
                                           unsigned order, std::uint64_t samples,
                                           std::uint64_t master_seed, unsigned workers);

/// (estimate - target) / standard_error; 0 or +-inf when the error is zero.
double z_score(const MomentEstimate& estimate, double target);

}  // namespace lahbell
