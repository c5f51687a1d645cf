#pragma once

#include <cstdint>
#include <vector>

#include "dinv/rational.hpp"

namespace dinv {

/// L(p, q) with gcd(p, q) = 1 and q reduced into [0, p). L(1, 0) is S³.
struct LensSpace {
  std::int64_t p = 1;
  std::int64_t q = 0;

  /// Reduces q mod p (any sign accepted). Throws InputError if p < 1 or
  /// gcd(p, q) ≠ 1.
  static LensSpace make(std::int64_t p, std::int64_t q);
};

/// d-invariants indexed by Spin^c label i ∈ {0, …, p−1}.
struct DInvariantTable {
  std::vector<Rational> entries;

  std::size_t size() const { return entries.size(); }
  const Rational& operator[](std::size_t i) const { return entries[i]; }
  RationalMultiset multiset() const { return make_multiset(entries); }
};

/// d(L(p, q), i) by the recursion
///   d(L(p,q), i) = ((2i+1−p−q)² − pq) / 4pq − d(L(q, p mod q), i mod q),
/// with d(S³) = 0. Results are memoized in a process-wide, thread-safe table.
Rational d_lens(std::int64_t p, std::int64_t q, std::int64_t i);

DInvariantTable d_lens_table(std::int64_t p, std::int64_t q);

/// Conjugate Spin^c label, (p + q − 1 − i) mod p, with q reduced mod p first.
std::int64_t conjugate_spinc_lens(std::int64_t p, std::int64_t q, std::int64_t i);

/// Number of memoized (p, q, i) triples; exposed for tests and diagnostics.
std::size_t lens_memo_size();

}  // namespace dinv
