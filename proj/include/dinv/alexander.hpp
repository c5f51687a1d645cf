#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dinv {

/// Symmetric, normalized integer Laurent polynomial Δ(t) = Δ(t⁻¹) with Δ(1) = 1.
///
/// Only nonzero coefficients are stored. The genus is the top exponent.
class AlexanderPoly {
 public:
  using Terms = std::map<std::int64_t, std::int64_t>;

  /// The unknot polynomial, Δ = 1.
  AlexanderPoly();

  /// Takes the full (both-sided) coefficient map. Zero entries are dropped.
  /// Throws InputError unless the result is symmetric with Δ(1) = 1.
  static AlexanderPoly from_terms(const Terms& terms);

  /// Takes the non-negative half {e ≥ 0 → a_e} and mirrors it to negative
  /// exponents. Throws InputError on negative exponents or Δ(1) ≠ 1.
  static AlexanderPoly from_nonnegative_half(const Terms& half);

  std::int64_t genus() const { return genus_; }
  std::int64_t coefficient(std::int64_t exponent) const;
  const Terms& terms() const { return terms_; }

  /// Exponents of the nonzero coefficients, largest first.
  std::vector<std::int64_t> exponents_descending() const;

  /// Same text format that parse_alex accepts: "e:c" pairs, e ≥ 0, descending.
  std::string to_string() const;

  friend bool operator==(const AlexanderPoly&, const AlexanderPoly&) = default;

 private:
  explicit AlexanderPoly(Terms terms);

  Terms terms_;
  std::int64_t genus_ = 0;
};

/// Parses "e:c,e:c,..." listing the non-negative-exponent half (constant term
/// as given) and returns the symmetrized polynomial.
AlexanderPoly parse_alex(std::string_view text);

/// True iff the nonzero coefficients, read from the top exponent down, are
/// +1, -1, +1, ... (the form taken by Alexander polynomials of L-space knots).
bool validate_lspace(const AlexanderPoly& poly);

}  // namespace dinv
