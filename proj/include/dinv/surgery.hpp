#pragma once

#include <cstdint>

#include "dinv/knot_model.hpp"
#include "dinv/lens.hpp"

namespace dinv {

/// Positive p/q surgery on a knot described by its V_i. Negative slopes are
/// handled by mirroring the knot before calling in.
struct SurgeryDescription {
  std::int64_t p;
  std::int64_t q;
  ViSequence v;

  /// Throws InputError unless p, q > 0 and gcd(p, q) = 1.
  static SurgeryDescription make(std::int64_t p, std::int64_t q, ViSequence v);
};

/// d(S³_{p/q}(K), i) = d(L(p,q), i) − 2·max{V_{⌊i/q⌋}, V_{⌊(p+q−1−i)/q⌋}}.
Rational d_surgery(std::int64_t p, std::int64_t q, const ViSequence& v, std::int64_t i);

DInvariantTable d_surgery_table(std::int64_t p, std::int64_t q, const ViSequence& v);

/// Pairwise sums {a + b}; d-invariants are additive under connected sum.
RationalMultiset d_connected_sum_multiset(const RationalMultiset& a, const RationalMultiset& b);
RationalMultiset d_connected_sum_multiset(const DInvariantTable& a, const DInvariantTable& b);

/// Compares pq-surgery on T(p,q) against L(p,q) # L(q,p) at the level of
/// d-invariant multisets. Requires 2 ≤ q < p, gcd(p, q) = 1.
bool moser_check(std::int64_t p, std::int64_t q);

}  // namespace dinv
