#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dinv/alexander.hpp"

namespace dinv {

/// V_0, V_1, …, V_g of a knot: non-negative, non-increasing in steps of 0 or 1,
/// with V_g = 0. Indices past g read as 0; negative indices use V_{−i} = V_i + i.
class ViSequence {
 public:
  /// The unknot (and any slice knot): V ≡ 0.
  ViSequence() : values_{0} {}

  /// Throws InputError if the values break any of the invariants above.
  explicit ViSequence(std::vector<std::int64_t> values);

  std::int64_t genus() const { return static_cast<std::int64_t>(values_.size()) - 1; }
  const std::vector<std::int64_t>& values() const { return values_; }

  friend bool operator==(const ViSequence&, const ViSequence&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// One generator of the staircase complex: Alexander grading A, Maslov grading
/// M, and δ = A − M.
struct StaircaseGenerator {
  std::int64_t alexander;
  std::int64_t maslov;
  std::int64_t delta;

  friend bool operator==(const StaircaseGenerator&, const StaircaseGenerator&) = default;
};

using Staircase = std::vector<StaircaseGenerator>;

/// Δ of the (p, q) torus knot, (t^{pq}−1)(t−1) / ((t^p−1)(t^q−1)), symmetrized.
/// Accepts either order of the two parameters; both must be ≥ 2 and coprime.
AlexanderPoly torus_alex(std::int64_t p, std::int64_t q);

/// Torsion coefficients t_i = Σ_{k>i} (k − i)·a_k for i = 0, …, g.
std::vector<std::int64_t> torsion_coeffs(const AlexanderPoly& poly);

/// V_i = t_i, valid for L-space knots. Throws InputError unless
/// validate_lspace(poly).
ViSequence vi_from_alex(const AlexanderPoly& poly);

/// V_i for any integer i.
std::int64_t v_at(const ViSequence& v, std::int64_t i);

/// Smallest k ≥ 0 with V_k = 0.
std::int64_t nu_plus(const ViSequence& v);

/// Maslov/Alexander gradings of the staircase generators, top generator first.
/// M = 0 at A = g; odd steps drop M by 1, even steps by 2·gap − 1.
Staircase staircase(const AlexanderPoly& poly);

/// max δ − min δ over the staircase, so thin knots have thickness 0.
std::int64_t thickness(const AlexanderPoly& poly);

/// First index at which V_i ≤ ⌈(g4 − i)/2⌉ fails (a negative right side is
/// read as the requirement V_i = 0).
struct V4BallViolation {
  std::int64_t index;
  std::int64_t value;
  std::int64_t bound;
};

std::optional<V4BallViolation> v4ball_violation(const ViSequence& v, std::int64_t g4);

inline bool check_v4ball_bound(const ViSequence& v, std::int64_t g4) { return !v4ball_violation(v, g4); }

}  // namespace dinv
