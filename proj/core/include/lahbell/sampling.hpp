#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lahbell/distributions.hpp"

namespace lahbell {

/// SplitMix64 finaliser; used to derive independent generator seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of stream `stream_index` under `master_seed`: two rounds of SplitMix64
/// so that neighbouring indices and neighbouring master seeds decorrelate.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index);

/// Deterministic generator stream. The same (master_seed, stream_index)
/// always reproduces the same sequence on every platform: the engine is
/// mt19937_64 and uniform variates are built from its raw 64-bit output
/// rather than from implementation-defined std distributions.
class SamplerStream {
 public:
  explicit SamplerStream(std::uint64_t master_seed, std::uint64_t stream_index = 0);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [0, bound), bound > 0.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

/// Inverse-CDF sampler over a cumulative table built once at construction.
///
/// Finite supports use the exact cumulative masses (which must total exactly
/// one) converted to doubles. The classical Poisson law is tabulated until
/// the covered mass reaches `coverage`; the last bucket absorbs the tail.
class InverseCdfSampler {
 public:
  /// Throws SignedMassError when any mass is negative and TailError when the
  /// infinite table cannot reach `coverage` within `term_budget` entries.
  explicit InverseCdfSampler(const Distribution& distribution, double coverage = 1.0 - 1e-12,
                             unsigned term_budget = 100000);

  unsigned draw(SamplerStream& stream) const;
  std::span<const double> cumulative() const { return cumulative_; }

 private:
  std::vector<double> cumulative_;
};

/// One variate; builds the table on every call, so prefer InverseCdfSampler
/// for repeated draws.
unsigned sample(const Distribution& distribution, SamplerStream& stream);

}  // namespace lahbell
