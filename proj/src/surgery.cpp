#include "dinv/surgery.hpp"

#include <numeric>
#include <string>

#include "dinv/error.hpp"

namespace dinv {

namespace {

std::int64_t correction(std::int64_t p, std::int64_t q, const ViSequence& v, std::int64_t i) {
  return 2 * std::max(v_at(v, i / q), v_at(v, (p + q - 1 - i) / q));
}

}  // namespace

SurgeryDescription SurgeryDescription::make(std::int64_t p, std::int64_t q, ViSequence v) {
  if (p <= 0 || q <= 0) {
    throw InputError("surgery slope " + std::to_string(p) + "/" + std::to_string(q) +
                     " must be positive (mirror the knot for negative slopes)");
  }
  if (std::gcd(p, q) != 1) throw InputError("surgery slope p/q needs gcd(p, q) = 1");
  return SurgeryDescription{p, q, std::move(v)};
}

Rational d_surgery(std::int64_t p, std::int64_t q, const ViSequence& v, std::int64_t i) {
  SurgeryDescription::make(p, q, v);
  if (i < 0 || i >= p) {
    throw InputError("Spin^c index " + std::to_string(i) + " outside [0, " + std::to_string(p - 1) + "]");
  }
  return d_lens(p, q, i) - Rational(correction(p, q, v, i));
}

DInvariantTable d_surgery_table(std::int64_t p, std::int64_t q, const ViSequence& v) {
  SurgeryDescription::make(p, q, v);
  DInvariantTable table = d_lens_table(p, q);
  for (std::int64_t i = 0; i < p; ++i) {
    table.entries[static_cast<std::size_t>(i)] -= Rational(correction(p, q, v, i));
  }
  return table;
}

RationalMultiset d_connected_sum_multiset(const RationalMultiset& a, const RationalMultiset& b) {
  std::vector<Rational> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) sums.push_back(x + y);
  }
  return make_multiset(std::move(sums));
}

RationalMultiset d_connected_sum_multiset(const DInvariantTable& a, const DInvariantTable& b) {
  return d_connected_sum_multiset(a.multiset(), b.multiset());
}

bool moser_check(std::int64_t p, std::int64_t q) {
  if (q < 2 || q >= p) throw InputError("Moser check needs 2 <= q < p");
  if (std::gcd(p, q) != 1) throw InputError("Moser check needs gcd(p, q) = 1");
  const ViSequence v = vi_from_alex(torus_alex(p, q));
  const RationalMultiset surgery = d_surgery_table(p * q, 1, v).multiset();
  const RationalMultiset sum = d_connected_sum_multiset(d_lens_table(p, q), d_lens_table(q, p % q));
  return surgery == sum;
}

}  // namespace dinv
