#include "dinv/knot_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dinv/error.hpp"

namespace dinv {

namespace {

using Coeffs = std::vector<std::int64_t>;  // index = exponent, non-negative powers only

// Exact division of num by a monic divisor; throws if the remainder is nonzero.
Coeffs divide_exact(Coeffs num, const Coeffs& divisor) {
  const std::size_t dd = divisor.size() - 1;
  Coeffs quotient(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    std::int64_t c = num[k];
    if (c == 0) continue;
    quotient[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * divisor[j];
  }
  if (std::any_of(num.begin(), num.end(), [](std::int64_t c) { return c != 0; })) {
    throw std::logic_error("torus knot polynomial division left a remainder");
  }
  return quotient;
}

Coeffs t_power_minus_one(std::int64_t n) {
  Coeffs c(static_cast<std::size_t>(n) + 1, 0);
  c.front() = -1;
  c.back() = 1;
  return c;
}

}  // namespace

ViSequence::ViSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("V sequence must contain at least V_0");
  if (values_.back() != 0) throw InputError("V sequence must end at 0");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) throw InputError("V_" + std::to_string(i) + " is negative");
    if (i + 1 < values_.size()) {
      std::int64_t step = values_[i] - values_[i + 1];
      if (step != 0 && step != 1) {
        throw InputError("V_" + std::to_string(i) + " - V_" + std::to_string(i + 1) + " must be 0 or 1");
      }
    }
  }
  // Trailing zeros carry no information: V_g is the first zero.
  auto first_zero = std::find(values_.begin(), values_.end(), 0);
  values_.erase(first_zero + 1, values_.end());
}

AlexanderPoly torus_alex(std::int64_t p, std::int64_t q) {
  if (p < q) std::swap(p, q);
  if (q < 2) throw InputError("torus knot T(p,q) needs p, q >= 2");
  if (std::gcd(p, q) != 1) {
    throw InputError("torus knot T(" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime parameters");
  }
  // (t^{pq} − 1)(t − 1) = t^{pq+1} − t^{pq} − t + 1
  Coeffs num(static_cast<std::size_t>(p * q) + 2, 0);
  num[0] = 1;
  num[1] = -1;
  num[static_cast<std::size_t>(p * q)] = -1;
  num[static_cast<std::size_t>(p * q) + 1] = 1;
  Coeffs quotient = divide_exact(divide_exact(std::move(num), t_power_minus_one(p)), t_power_minus_one(q));

  const std::int64_t genus = (p - 1) * (q - 1) / 2;
  AlexanderPoly::Terms terms;
  for (std::size_t e = 0; e < quotient.size(); ++e) {
    if (quotient[e] != 0) terms.emplace(static_cast<std::int64_t>(e) - genus, quotient[e]);
  }
  return AlexanderPoly::from_terms(terms);
}

std::vector<std::int64_t> torsion_coeffs(const AlexanderPoly& poly) {
  const std::int64_t g = poly.genus();
  std::vector<std::int64_t> t(static_cast<std::size_t>(g) + 1, 0);
  for (std::int64_t i = 0; i <= g; ++i) {
    std::int64_t sum = 0;
    for (const auto& [k, a] : poly.terms()) {
      if (k > i) sum += (k - i) * a;
    }
    t[static_cast<std::size_t>(i)] = sum;
  }
  return t;
}

ViSequence vi_from_alex(const AlexanderPoly& poly) {
  if (!validate_lspace(poly)) {
    throw InputError("Alexander polynomial " + poly.to_string() + " is not of L-space knot form");
  }
  return ViSequence(torsion_coeffs(poly));
}

std::int64_t v_at(const ViSequence& v, std::int64_t i) {
  if (i < 0) return v_at(v, -i) - i;
  if (i > v.genus()) return 0;
  return v.values()[static_cast<std::size_t>(i)];
}

std::int64_t nu_plus(const ViSequence& v) {
  const auto& vals = v.values();
  return std::find(vals.begin(), vals.end(), 0) - vals.begin();
}

Staircase staircase(const AlexanderPoly& poly) {
  if (!validate_lspace(poly)) {
    throw InputError("Alexander polynomial " + poly.to_string() + " is not of L-space knot form");
  }
  const auto exps = poly.exponents_descending();
  Staircase out;
  out.reserve(exps.size());
  std::int64_t m = 0;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (j > 0) m -= (j % 2 == 1) ? 1 : 2 * (exps[j - 1] - exps[j]) - 1;
    out.push_back({exps[j], m, exps[j] - m});
  }

  // Mirror symmetry M(−a) = M(a) − 2a; the exponent list is symmetric, so
  // generator j pairs with generator n − 1 − j.
  const std::size_t n = out.size();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& top = out[j];
    const auto& bottom = out[n - 1 - j];
    if (bottom.alexander != -top.alexander || bottom.maslov != top.maslov - 2 * top.alexander) {
      throw std::logic_error("staircase gradings violate mirror symmetry at A = " + std::to_string(top.alexander));
    }
  }
  return out;
}

std::int64_t thickness(const AlexanderPoly& poly) {
  const Staircase s = staircase(poly);
  auto [lo, hi] = std::minmax_element(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.delta < b.delta; });
  return hi->delta - lo->delta;
}

std::optional<V4BallViolation> v4ball_violation(const ViSequence& v, std::int64_t g4) {
  if (g4 < 0) throw InputError("4-ball genus must be non-negative");
  for (std::int64_t i = 0; i <= v.genus(); ++i) {
    std::int64_t diff = g4 - i;
    // ⌈diff / 2⌉ for either sign of diff
    std::int64_t ceil_half = diff >= 0 ? (diff + 1) / 2 : -((-diff) / 2);
    std::int64_t bound = std::max<std::int64_t>(ceil_half, 0);
    std::int64_t value = v_at(v, i);
    if (value > bound) return V4BallViolation{i, value, bound};
  }
  return std::nullopt;
}

}  // namespace dinv
