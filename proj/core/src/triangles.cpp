#include "lahbell/triangles.hpp"

#include <mutex>

#include "lahbell/factorials.hpp"

namespace lahbell {

namespace {

// Row n+1 from row n.
//   Lah:        L(n+1,k) = L(n,k-1) + (n+k) L(n,k)
//   Stirling1:  s(n+1,k) = s(n,k-1) - n s(n,k)
//   Stirling2:  S(n+1,k) = S(n,k-1) + k S(n,k)
std::vector<BigInt> next_row(TriangleKind kind, const std::vector<BigInt>& prev) {
  const unsigned n = static_cast<unsigned>(prev.size() - 1);
  std::vector<BigInt> row(n + 2);
  for (unsigned k = 0; k <= n + 1; ++k) {
    const BigInt left = k >= 1 ? prev[k - 1] : BigInt(0);
    const BigInt same = k <= n ? prev[k] : BigInt(0);
    switch (kind) {
      case TriangleKind::kLah:
        row[k] = left + BigInt(n + k) * same;
        break;
      case TriangleKind::kStirling1Signed:
        row[k] = left - BigInt(n) * same;
        break;
      case TriangleKind::kStirling2:
        row[k] = left + BigInt(k) * same;
        break;
    }
  }
  return row;
}

}  // namespace

TriangleCache::TriangleCache(TriangleKind kind) : kind_(kind) {
  rows_.push_back(std::vector<BigInt>{BigInt(1)});
}

std::span<const BigInt> TriangleCache::row(unsigned n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < rows_.size()) return rows_[n];
  }
  extend_to(n);
  std::shared_lock lock(mutex_);
  return rows_[n];
}

BigInt TriangleCache::at(unsigned n, unsigned k) const {
  if (k > n) return 0;
  return row(n)[k];
}

std::size_t TriangleCache::rows_built() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

void TriangleCache::extend_to(unsigned n) const {
  std::unique_lock lock(mutex_);
  while (rows_.size() <= n) rows_.push_back(next_row(kind_, rows_.back()));
}

const TriangleCache& lah_triangle() {
  static const TriangleCache cache(TriangleKind::kLah);
  return cache;
}

const TriangleCache& stirling1_triangle() {
  static const TriangleCache cache(TriangleKind::kStirling1Signed);
  return cache;
}

const TriangleCache& stirling2_triangle() {
  static const TriangleCache cache(TriangleKind::kStirling2);
  return cache;
}

BigInt lah_number(unsigned n, unsigned k) { return lah_triangle().at(n, k); }

BigInt stirling1_signed(unsigned n, unsigned k) { return stirling1_triangle().at(n, k); }

BigInt stirling1_unsigned(unsigned n, unsigned k) { return abs(stirling1_signed(n, k)); }

BigInt stirling2(unsigned n, unsigned k) { return stirling2_triangle().at(n, k); }

BigInt lah_number_closed_form(unsigned n, unsigned k) {
  if (n == 0 && k == 0) return 1;
  if (k == 0 || k > n) return 0;
  return binomial_coefficient(n - 1, k - 1) * factorial(n) / factorial(k);
}

}  // namespace lahbell
