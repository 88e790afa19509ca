#pragma once

#include <cstddef>
#include <deque>
#include <shared_mutex>
#include <span>
#include <vector>

#include "lahbell/rational.hpp"

namespace lahbell {

enum class TriangleKind {
  kLah,              // unsigned Lah numbers L(n,k)
  kStirling1Signed,  // coefficients of x^k in (x)_n
  kStirling2,        // coefficients of (x)_k in x^n
};

/// Lower-triangular table of one number family, grown row by row from its
/// recurrence and memoised. Row 0 is [1]; entries with k > n are zero.
///
/// Published rows are immutable: spans returned by row() stay valid for the
/// cache's lifetime and may be read from any thread. Growth is serialised.
class TriangleCache {
 public:
  explicit TriangleCache(TriangleKind kind);

  TriangleCache(const TriangleCache&) = delete;
  TriangleCache& operator=(const TriangleCache&) = delete;

  TriangleKind kind() const { return kind_; }

  /// Entries k = 0..n of row n.
  std::span<const BigInt> row(unsigned n) const;
  BigInt at(unsigned n, unsigned k) const;
  std::size_t rows_built() const;

 private:
  void extend_to(unsigned n) const;

  TriangleKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<BigInt>> rows_;
};

/// Process-wide caches shared by every module.
const TriangleCache& lah_triangle();
const TriangleCache& stirling1_triangle();
const TriangleCache& stirling2_triangle();

BigInt lah_number(unsigned n, unsigned k);
/// Signed S1(n,k), sign (-1)^(n-k).
BigInt stirling1_signed(unsigned n, unsigned k);
/// |S1(n,k)| = (-1)^(n-k) S1(n,k).
BigInt stirling1_unsigned(unsigned n, unsigned k);
BigInt stirling2(unsigned n, unsigned k);

/// C(n-1,k-1) n!/k! for 1 <= k <= n, L(0,0) = 1, zero otherwise. Kept
/// independent of the recurrence table so the two can check each other.
BigInt lah_number_closed_form(unsigned n, unsigned k);

}  // namespace lahbell
