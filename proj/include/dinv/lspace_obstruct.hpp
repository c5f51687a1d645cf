#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dinv/alexander.hpp"
#include "dinv/knot_model.hpp"

namespace dinv {

// Reducible surgeries S³_{2g−1}(K) ≅ Y_p # Y_q on L-space knots. Here
// pq = 2g − 1, so p and q are both odd, and m = (p − q)/2.

/// Lower bound on th(K): q−1 if m = 1, q+m−2 if 1 < m < q+2, 2(q−1) otherwise.
std::int64_t thickness_lower_bound(std::int64_t p, std::int64_t q);

/// Upper bound on th(K): q + m = (p + q)/2.
std::int64_t thickness_upper_bound(std::int64_t p, std::int64_t q);

/// True if a hyperbolic L-space knot of genus g and thickness th cannot have a
/// reducing slope: 2g − 1 = 1, or 2g − 1 prime, or th < t − 1 with t the
/// smallest prime factor of 2g − 1.
bool smallthick_obstruction(std::int64_t g, std::int64_t th);

struct Run {
  std::int64_t value;
  std::int64_t length;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length encoding of V_0 … V_{g−1}.
struct BlockDecomposition {
  std::vector<Run> runs;
  /// Index into `runs` of the run holding all of V_{k+1} … V_{k+q},
  /// k = (p−1)(q−1)/2 − 1, when a (p, q) context was given and such a run exists.
  std::optional<std::size_t> central_block;
};

BlockDecomposition block_decomposition(const ViSequence& v);
BlockDecomposition block_decomposition(const ViSequence& v, std::int64_t p, std::int64_t q);

/// Recovers V for p = q + 2 by seeding V_{k+1} = … = V_{g−1} = 1 and solving the
/// sum identity for V_ℓ at ℓ = k, k−1, …, 0. Requires odd q ≥ 3.
ViSequence reconstruct_vi_pq2(std::int64_t q);

/// Closed-form Alexander polynomial for the p = q + 2 case (branching on
/// p mod 4), symmetrized. Requires odd q ≥ 3.
AlexanderPoly gen_alex_pq2(std::int64_t q);

/// Message if some run among V_0 … V_{g−1} is longer than (p+q)/2 + 2.
std::optional<std::string> long_run_warning(const ViSequence& v, std::int64_t p, std::int64_t q);

struct Pq2CrossCheck {
  std::int64_t q;
  std::int64_t p;
  ViSequence reconstructed;
  ViSequence from_polynomial;
  std::int64_t thickness;
  std::int64_t lower_bound;
  std::int64_t upper_bound;

  bool vi_agree() const { return reconstructed == from_polynomial; }
  bool thickness_in_bounds() const { return lower_bound <= thickness && thickness <= upper_bound; }
  bool ok() const { return vi_agree() && thickness_in_bounds(); }
};

Pq2CrossCheck cross_check_pq2_detail(std::int64_t q);

/// Torsion coefficients of gen_alex_pq2(q) equal reconstruct_vi_pq2(q), and its
/// thickness lies within [lower, upper] bounds for (q + 2, q).
inline bool cross_check_pq2(std::int64_t q) { return cross_check_pq2_detail(q).ok(); }

}  // namespace dinv
