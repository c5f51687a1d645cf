// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>

#include "dinv/knot_model.hpp"
#include "dinv/lens.hpp"
#include "dinv/lspace_obstruct.hpp"
#include "dinv/reducibility.hpp"
#include "dinv/surgery.hpp"
#include "test_support.hpp"

using namespace dinv;

namespace {

// Pinned tolerances. All arithmetic checks are exact; only wall-clock limits carry slack.
constexpr double kLensTableLimitMs = 1.0;
constexpr double kSweepLimitSeconds = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

RationalMultiset parse_all(std::initializer_list<const char*> xs) {
  RationalMultiset out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return make_multiset(std::move(out));
}

Outcome criterion_1() {
  Outcome o;
  const std::vector<std::pair<std::pair<int, int>, std::vector<const char*>>> cases{
      {{2, 1}, {"1/4", "-1/4"}},
      {{3, 1}, {"1/2", "-1/6", "-1/6"}},
      {{3, 2}, {"1/6", "1/6", "-1/2"}},
      {{6, 1}, {"5/4", "5/12", "-1/12", "-1/4", "-1/12", "5/12"}},
  };
  const std::size_t memo_before = lens_memo_size();
  const auto start = Clock::now();
  std::vector<DInvariantTable> tables;
  for (const auto& [pq, _] : cases) tables.push_back(d_lens_table(pq.first, pq.second));
  const double ms = seconds_since(start) * 1e3;

  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& expected = cases[c].second;
    if (tables[c].size() != expected.size()) {
      o.fail("wrong table size");
      continue;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (tables[c][static_cast<std::int64_t>(i)] != Rational::parse(expected[i])) {
        o.fail("L(" + std::to_string(cases[c].first.first) + "," + std::to_string(cases[c].first.second) +
               ") entry " + std::to_string(i));
      }
    }
  }
  if (ms >= kLensTableLimitMs) o.fail("too slow");
  o.detail << "4 tables exact, memo " << (memo_before == 0 ? "cold" : "warm") << ", " << ms << " ms (limit "
           << kLensTableLimitMs << " ms)";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto start = Clock::now();
  std::int64_t identities = 0;
  for (std::int64_t p = 2; p <= 200; ++p) {
    for (std::int64_t a = 1; a < p; ++a) {
      if (std::gcd(p, a) != 1) continue;
      const auto table = d_lens_table(p, a);
      for (std::int64_t i = 0; i < p; ++i) {
        const Rational lhs = table[i] - table[(a + i) % p];
        if (lhs != Rational(p - 2 * i - 1, p)) {
          o.fail("L(" + std::to_string(p) + "," + std::to_string(a) + ") i=" + std::to_string(i));
        }
        ++identities;
      }
    }
  }
  const double s = seconds_since(start);
  if (s >= kSweepLimitSeconds) o.fail("too slow");
  o.detail << identities << " identities for p <= 200, index offset 0, " << s << " s";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const auto start = Clock::now();
  const auto pairs = testing::coprime_pairs(200);
  for (const auto& [p, q] : pairs) {
    if (!moser_check(p, q)) o.fail("T(" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  const auto trefoil = d_surgery_table(6, 1, vi_from_alex(torus_alex(3, 2))).multiset();
  if (trefoil != parse_all({"-3/4", "5/12", "5/12", "-1/4", "-1/12", "-1/12"})) o.fail("(3,2) multiset");
  const double s = seconds_since(start);
  if (s >= kSweepLimitSeconds) o.fail("too slow");
  o.detail << pairs.size() << " torus knots with pq <= 200 plus the (3,2) multiset, " << s << " s";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto pairs = testing::coprime_pairs(200);
  std::size_t rows = 0;
  for (const auto& [p, q] : pairs) {
    const auto hyp = ReducibleHypothesis::make(p, q);
    const auto report = check_reducible_constraints(vi_from_alex(torus_alex(p, q)), p, q);
    rows += report.rows.size();
    if (report.verdict != Verdict::pass ||
        static_cast<std::int64_t>(report.rows.size()) != hyp.ell_max() + 1) {
      o.fail("torus T(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    const auto zero = check_reducible_constraints(ViSequence{}, p, q);
    const auto bad = zero.failing_rows();
    if (zero.verdict != Verdict::contradiction || bad.empty() || bad.front().ell != 0 ||
        bad.front().rhs - bad.front().lhs != (p - 1) * (q - 1) / 2) {
      o.fail("V = 0 at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
  o.detail << pairs.size() << " torus knots, " << rows << " rows pass; V = 0 fails at l = 0 for each";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (std::int64_t p = 2; p <= 500; ++p) {
    if (slice_lens_params(p) != std::vector<std::int64_t>{1}) o.fail("p = " + std::to_string(p));
  }
  std::int64_t forced = 0, contradictions = 0;
  for (std::int64_t p = 2; p <= 60; ++p) {
    const auto v = slice_reducible_verdict(p, 1);
    if (v.report.verdict != Verdict::pass || !v.forced || v.forced->lens_p != p || v.forced->lens_a != 1 ||
        v.forced->homology_sphere_d != Rational(0)) {
      o.fail("q = 1 structure at p = " + std::to_string(p));
    } else {
      ++forced;
    }
    for (std::int64_t q = 2; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto w = slice_reducible_verdict(p, q);
      if (w.report.verdict != Verdict::contradiction || w.forced) {
        o.fail("(" + std::to_string(p) + "," + std::to_string(q) + ") not obstructed");
      } else {
        ++contradictions;
      }
    }
  }
  o.detail << "a = 1 only for 2 <= p <= 500; " << forced << " forced (q=1, a=1, d(Y)=0), " << contradictions
           << " contradictions for p, q > 1";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const auto start = Clock::now();
  for (std::int64_t q = 3; q <= 31; q += 2) {
    const auto c = cross_check_pq2_detail(q);
    o.detail << "q=" << q << " V " << (c.vi_agree() ? "agree" : "DIFFER") << " th=" << c.thickness << " in ["
             << c.lower_bound << "," << c.upper_bound << "]" << (c.thickness_in_bounds() ? "" : "!") << "; ";
    if (!c.ok()) o.pass = false;
  }
  o.detail << seconds_since(start) << " s";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::size_t knots = 0;

  auto check_knot = [&](const AlexanderPoly& poly, const std::string& name) {
    ++knots;
    const ViSequence v = vi_from_alex(poly);
    const auto& vals = v.values();
    const std::int64_t g = poly.genus();
    for (std::size_t i = 1; i < vals.size(); ++i) {
      const auto step = vals[i - 1] - vals[i];
      if (step != 0 && step != 1) o.fail(name + " V step");
    }
    for (std::int64_t i = 0; i <= g + 2; ++i) {
      if (v_at(v, -i) - v_at(v, i) != i) o.fail(name + " V_{-i} - V_i");
    }
    if (g >= 1 && v_at(v, g - 1) != 1) o.fail(name + " V_{g-1}");
    if (nu_plus(v) > g) o.fail(name + " nu+ > g");

    const auto sc = staircase(poly);
    std::map<std::int64_t, std::int64_t> maslov;
    for (const auto& gen : sc) maslov[gen.alexander] = gen.maslov;
    for (const auto& [a, m] : maslov) {
      auto mirror = maslov.find(-a);
      if (mirror == maslov.end() || mirror->second != m - 2 * a) o.fail(name + " mirror symmetry");
    }
    if (maslov.begin()->first != -g || maslov.begin()->second != -2 * g) o.fail(name + " bottom Maslov");
  };

  // Exhaustive: every admissible V sequence up to genus 10.
  for (std::int64_t g = 0; g <= 10; ++g) {
    const std::int64_t free_steps = g > 0 ? g - 1 : 0;
    for (std::int64_t mask = 0; mask < (std::int64_t{1} << free_steps); ++mask) {
      std::vector<std::int64_t> t(static_cast<std::size_t>(g) + 1, 0);
      for (std::int64_t i = g - 1; i >= 0; --i) {
        const std::int64_t step = (i == g - 1) ? 1 : (mask >> i) & 1;
        t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i) + 1] + step;
      }
      check_knot(testing::alex_from_torsion(t), "exhaustive g=" + std::to_string(g));
    }
  }
  // Randomized: larger genera from a fixed seed.
  for (int trial = 0; trial < 2000; ++trial) {
    check_knot(testing::alex_from_torsion(testing::random_lspace_v(60)), "random #" + std::to_string(trial));
  }
  // Torus knots, including the four-ball bound with g4 = g.
  for (const auto& [p, q] : testing::coprime_pairs(400)) {
    const auto poly = torus_alex(p, q);
    const std::string name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    check_knot(poly, name);
    if (!check_v4ball_bound(vi_from_alex(poly), poly.genus())) o.fail(name + " four-ball bound");
  }
  for (std::int64_t n = 3; n <= 31; n += 2) {
    if (thickness(torus_alex(2, n)) != 0) o.fail("th(T(2," + std::to_string(n) + "))");
  }
  o.detail << knots << " knots checked (exhaustive genus <= 10, 2000 random, torus pq <= 400), th(T(2,n)) = 0";
  return o;
}

}  // namespace

int main() {
  using Fn = Outcome (*)();
  const std::vector<std::pair<const char*, Fn>> criteria{
      {"lens recursion values", criterion_1},
      {"spin^c shift identity sweep", criterion_2},
      {"Moser surgery oracle", criterion_3},
      {"reducible sum identity sweep", criterion_4},
      {"slice machinery", criterion_5},
      {"p - q = 2 reconstruction", criterion_6},
      {"invariant suite", criterion_7},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::printf("CRITERION %zu %s: %s | %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first,
                o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
