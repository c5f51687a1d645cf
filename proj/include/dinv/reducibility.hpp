#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dinv/knot_model.hpp"
#include "dinv/rational.hpp"

namespace dinv {

/// S³_{pq}(K) ≅ Y_p # Y_q with |H²(Y_p)| = p and |H²(Y_q)| = q.
struct ReducibleHypothesis {
  std::int64_t p;
  std::int64_t q;

  /// Throws InputError unless p > q ≥ 1 and gcd(p, q) = 1.
  static ReducibleHypothesis make(std::int64_t p, std::int64_t q);

  std::int64_t slope() const { return p * q; }
  /// Largest ℓ for which the sum identity is asserted, (p−1)(q−1)/2.
  std::int64_t ell_max() const { return (p - 1) * (q - 1) / 2; }
};

enum class Verdict { pass, contradiction };

const char* to_string(Verdict v);

/// One instance of the sum identity at a given ℓ.
struct SumIdentityRow {
  std::int64_t ell;
  std::int64_t lhs;
  std::int64_t rhs;
  bool holds() const { return lhs == rhs; }
};

/// Verdict plus the evidence it rests on. `rows` lists every ℓ evaluated;
/// `notes` carries case tags for verdicts that are not row-based.
struct ObstructionReport {
  Verdict verdict = Verdict::pass;
  std::vector<SumIdentityRow> rows;
  std::vector<std::string> notes;

  std::vector<SumIdentityRow> failing_rows() const;
};

/// min{j, pq − j} for 0 ≤ j ≤ pq.
std::int64_t alpha(std::int64_t j, std::int64_t pq);

/// Σ_{i=0}^{q−1} (V_{ℓ+i} − V_{α(ℓ+i+p)}), for 0 ≤ ℓ ≤ (p−1)(q−1)/2.
std::int64_t sum_identity_lhs(const ViSequence& v, std::int64_t p, std::int64_t q, std::int64_t ell);

/// Evaluates the sum identity against (p−1)(q−1)/2 − ℓ for every ℓ in range.
/// A contradiction means slope pq cannot split as hypothesized.
ObstructionReport check_reducible_constraints(const ViSequence& v, std::int64_t p, std::int64_t q);

/// Lens parameters a (coprime to p, 1 ≤ a < p) for which s(p − s) = p − a has
/// an integer solution s ∈ [0, p]; the companion equation s(p − s) = −a never
/// does for such a.
std::vector<std::int64_t> slice_lens_params(std::int64_t p);

/// Summands forced when a slice knot has a reducing slope p = p·1.
struct ForcedSummands {
  std::int64_t lens_p;
  std::int64_t lens_a;
  Rational homology_sphere_d;
};

struct SliceVerdict {
  ObstructionReport report;
  std::optional<ForcedSummands> forced;
};

/// Reducible pq-surgery on a knot with V ≡ 0: impossible unless q = 1, and
/// then the lens summand is L(p, 1) and the homology sphere has d = 0.
SliceVerdict slice_reducible_verdict(std::int64_t p, std::int64_t q);

/// Lower bound (p−1)(q−1)/2 on slice genus (via ν⁺) for p > q > 1 coprime.
std::int64_t slice_genus_bound(std::int64_t p, std::int64_t q);

struct SlopeCandidate {
  std::int64_t slope;
  std::int64_t p;
  std::int64_t q;
  friend bool operator==(const SlopeCandidate&, const SlopeCandidate&) = default;
};

/// Every slope pq (p > q > 1 coprime) a knot of slice genus gs could reduce
/// along with two summands carrying homology, ordered by slope then p.
std::vector<SlopeCandidate> slice_slope_candidates(std::int64_t gs);

// Slope filters taking caller-asserted geometric hypotheses. `true` means
// the slope (or pair of slopes) is excluded.

/// Fibered knot of genus g, S³_r(K) ≅ L(r, a) # (homology sphere): r ≤ g.
inline bool fibered_slope_filter(std::int64_t r, std::int64_t g) { return r > g; }

/// Consecutive reducing slopes r, r+1, each splitting off a homology sphere,
/// on a knot with ν < g: r + 1 ≤ g.
inline bool consecutive_slope_filter(std::int64_t r, std::int64_t g, bool nu_less_than_g) {
  return nu_less_than_g && r + 1 > g;
}

}  // namespace dinv
