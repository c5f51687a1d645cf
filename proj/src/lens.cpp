#include "dinv/lens.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "dinv/error.hpp"

namespace dinv {

namespace {

struct Key {
  std::int64_t p, q, i;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(k.p);
    h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::int64_t>{}(k.q);
    h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::int64_t>{}(k.i);
    return h;
  }
};

// Entries are never modified once inserted.
class LensMemo {
 public:
  bool find(const Key& key, Rational& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }

  void insert(const Key& key, const Rational& value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(key, value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Rational, KeyHash> table_;
};

LensMemo& memo() {
  static LensMemo instance;
  return instance;
}

// p ≥ 1, 0 ≤ q < p, gcd(p, q) = 1, 0 ≤ i < p.
Rational d_lens_normalized(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p == 1) return Rational(0);
  Key key{p, q, i};
  Rational cached;
  if (memo().find(key, cached)) return cached;

  mpz_class pq = mpz_class(static_cast<long>(p)) * static_cast<long>(q);
  mpz_class shift = mpz_class(static_cast<long>(2 * i + 1)) - static_cast<long>(p) - static_cast<long>(q);
  Rational top(shift * shift - pq, 4 * pq);
  Rational value = top - d_lens_normalized(q, p % q, i % q);

  memo().insert(key, value);
  return value;
}

}  // namespace

LensSpace LensSpace::make(std::int64_t p, std::int64_t q) {
  if (p < 1) throw InputError("lens space needs p >= 1, got p = " + std::to_string(p));
  std::int64_t r = ((q % p) + p) % p;
  if (std::gcd(p, r) != 1) {
    throw InputError("L(" + std::to_string(p) + "," + std::to_string(q) + ") needs gcd(p, q) = 1");
  }
  return LensSpace{p, r};
}

Rational d_lens(std::int64_t p, std::int64_t q, std::int64_t i) {
  LensSpace lens = LensSpace::make(p, q);
  if (i < 0 || i >= lens.p) {
    throw InputError("Spin^c index " + std::to_string(i) + " outside [0, " + std::to_string(lens.p - 1) + "]");
  }
  return d_lens_normalized(lens.p, lens.q, i);
}

DInvariantTable d_lens_table(std::int64_t p, std::int64_t q) {
  LensSpace lens = LensSpace::make(p, q);
  DInvariantTable table;
  table.entries.reserve(static_cast<std::size_t>(lens.p));
  for (std::int64_t i = 0; i < lens.p; ++i) table.entries.push_back(d_lens_normalized(lens.p, lens.q, i));
  return table;
}

std::int64_t conjugate_spinc_lens(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p < 1) throw InputError("lens space needs p >= 1");
  if (i < 0 || i >= p) throw InputError("Spin^c index " + std::to_string(i) + " out of range");
  std::int64_t r = ((q % p) + p) % p;
  return (p + r - 1 - i) % p;
}

std::size_t lens_memo_size() { return memo().size(); }

}  // namespace dinv
