#include <doctest.h>

#include <numeric>
#include <thread>

#include "dinv/error.hpp"
#include "dinv/lens.hpp"

using namespace dinv;

namespace {

std::vector<Rational> row(std::initializer_list<std::pair<int, int>> fracs) {
  std::vector<Rational> out;
  for (auto [n, d] : fracs) out.emplace_back(n, d);
  return out;
}

}  // namespace

// Expected tables below come from unrolling the recursion by hand down to
// d(S³) = 0 (one level for L(p,1), two for L(3,2)).
TEST_CASE("d_lens small lens spaces") {
  CHECK(d_lens(2, 1, 0) == Rational(1, 4));
  CHECK(d_lens(2, 1, 1) == Rational(-1, 4));
  CHECK(d_lens(1, 0, 0) == Rational(0));
  CHECK(d_lens_table(3, 2).entries == row({{1, 6}, {1, 6}, {-1, 2}}));
  CHECK(d_lens_table(3, 1).entries == row({{1, 2}, {-1, 6}, {-1, 6}}));
  CHECK(d_lens_table(6, 1).entries == row({{5, 4}, {5, 12}, {-1, 12}, {-1, 4}, {-1, 12}, {5, 12}}));
  CHECK(d_lens_table(1, 0).entries == row({{0, 1}}));
}

TEST_CASE("d_lens normalizes q modulo p") {
  CHECK(d_lens_table(3, 5).entries == d_lens_table(3, 2).entries);
  CHECK(d_lens_table(3, -1).entries == d_lens_table(3, 2).entries);
  CHECK(d_lens(1, 7, 0) == Rational(0));
  CHECK(LensSpace::make(7, 10).q == 3);
}

TEST_CASE("d_lens errors") {
  CHECK_THROWS_AS(d_lens(4, 2, 0), InputError);
  CHECK_THROWS_AS(d_lens(3, 1, 3), InputError);
  CHECK_THROWS_AS(d_lens(3, 1, -1), InputError);
  CHECK_THROWS_AS(d_lens(0, 1, 0), InputError);
  CHECK_THROWS_AS(d_lens_table(6, 3), InputError);
}

TEST_CASE("conjugate_spinc_lens") {
  CHECK(conjugate_spinc_lens(3, 1, 1) == 2);
  CHECK(conjugate_spinc_lens(2, 1, 0) == 0);
  CHECK(conjugate_spinc_lens(3, 2, 2) == 2);
  CHECK(d_lens(3, 2, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(conjugate_spinc_lens(3, 1, 3), InputError);
}

TEST_CASE("property: conjugation symmetry and difference identity for p <= 60") {
  for (std::int64_t p = 1; p <= 60; ++p) {
    for (std::int64_t a = 0; a < p; ++a) {
      if (std::gcd(p, a) != 1) continue;
      const auto table = d_lens_table(p, a);
      for (std::int64_t i = 0; i < p; ++i) {
        CHECK(table[i] == table[conjugate_spinc_lens(p, a, i)]);
        if (p > 1) CHECK(table[i] - table[(a + i) % p] == Rational(p - 2 * i - 1, p));
      }
    }
  }
}

TEST_CASE("orientation reversal: L(3,2) multiset is minus L(3,1)") {
  auto neg = d_lens_table(3, 1).multiset();
  for (auto& x : neg) x = -x;
  CHECK(make_multiset(neg) == d_lens_table(3, 2).multiset());
}

TEST_CASE("property: L(p,p-q) = -L(p,q) as multisets") {
  for (std::int64_t p = 2; p <= 40; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto neg = d_lens_table(p, q).entries;
      for (auto& x : neg) x = -x;
      CHECK(make_multiset(neg) == d_lens_table(p, p - q).multiset());
    }
  }
}

TEST_CASE("memo gives identical results under concurrent use") {
  const auto reference = d_lens_table(97, 35);
  std::vector<std::thread> workers;
  std::vector<int> mismatches(8, 0);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([w, &reference, &mismatches] {
      for (std::int64_t p = 50 + w; p <= 120; p += 3) {
        for (std::int64_t q = 1; q < p; q += 7) {
          if (std::gcd(p, q) == 1) d_lens_table(p, q);
        }
      }
      if (d_lens_table(97, 35).entries != reference.entries) ++mismatches[w];
    });
  }
  for (auto& t : workers) t.join();
  CHECK(std::accumulate(mismatches.begin(), mismatches.end(), 0) == 0);
  CHECK(lens_memo_size() > 0);
}
