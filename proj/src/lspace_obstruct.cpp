#include "dinv/lspace_obstruct.hpp"

#include <numeric>
#include <stdexcept>

#include "dinv/error.hpp"
#include "dinv/reducibility.hpp"

namespace dinv {

namespace {

std::int64_t validated_m(std::int64_t p, std::int64_t q) {
  if (q < 2 || p <= q || std::gcd(p, q) != 1) {
    throw InputError("thickness bounds need p > q > 1 coprime");
  }
  if (p % 2 == 0 || q % 2 == 0) throw InputError("thickness bounds need p and q odd (pq = 2g - 1)");
  return (p - q) / 2;
}

void require_pq2(std::int64_t q) {
  if (q < 3 || q % 2 == 0) throw InputError("p - q = 2 case needs odd q >= 3, got q = " + std::to_string(q));
}

std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

}  // namespace

std::int64_t thickness_lower_bound(std::int64_t p, std::int64_t q) {
  const std::int64_t m = validated_m(p, q);
  if (m == 1) return q - 1;
  if (m < q + 2) return q + m - 2;
  return 2 * (q - 1);
}

std::int64_t thickness_upper_bound(std::int64_t p, std::int64_t q) { return q + validated_m(p, q); }

bool smallthick_obstruction(std::int64_t g, std::int64_t th) {
  if (g < 1) throw InputError("genus must be >= 1");
  if (th < 0) throw InputError("thickness must be >= 0");
  const std::int64_t slope = 2 * g - 1;
  if (slope == 1) return true;
  const std::int64_t t = smallest_prime_factor(slope);
  if (t == slope) return true;  // only slope·1 factors, and q = 1 is ruled out
  return th < t - 1;
}

BlockDecomposition block_decomposition(const ViSequence& v) {
  BlockDecomposition out;
  const auto& vals = v.values();
  for (std::int64_t i = 0; i < v.genus(); ++i) {
    const std::int64_t x = vals[static_cast<std::size_t>(i)];
    if (!out.runs.empty() && out.runs.back().value == x) {
      ++out.runs.back().length;
    } else {
      out.runs.push_back({x, 1});
    }
  }
  return out;
}

BlockDecomposition block_decomposition(const ViSequence& v, std::int64_t p, std::int64_t q) {
  const auto hyp = ReducibleHypothesis::make(p, q);
  BlockDecomposition out = block_decomposition(v);
  const std::int64_t first = hyp.ell_max();  // k + 1
  const std::int64_t last = first + q - 1;   // k + q
  if (last >= v.genus()) return out;
  std::int64_t start = 0;
  for (std::size_t r = 0; r < out.runs.size(); ++r) {
    const std::int64_t end = start + out.runs[r].length - 1;
    if (start <= first && first <= end) {
      if (last <= end) out.central_block = r;
      break;
    }
    start = end + 1;
  }
  return out;
}

ViSequence reconstruct_vi_pq2(std::int64_t q) {
  require_pq2(q);
  const std::int64_t p = q + 2;
  const std::int64_t g = (p * q + 1) / 2;
  const std::int64_t k = (p - 1) * (q - 1) / 2 - 1;

  std::vector<std::optional<std::int64_t>> known(static_cast<std::size_t>(g) + 1);
  known[static_cast<std::size_t>(g)] = 0;
  for (std::int64_t j = k + 1; j <= g - 1; ++j) known[static_cast<std::size_t>(j)] = 1;

  auto get = [&](std::int64_t idx) {
    if (idx > g) return std::int64_t{0};
    const auto& slot = known.at(static_cast<std::size_t>(idx));
    if (!slot) throw std::logic_error("reconstruction referenced undetermined V_" + std::to_string(idx));
    return *slot;
  };

  for (std::int64_t ell = k; ell >= 0; --ell) {
    // V_ℓ + Σ_{i≥1} V_{ℓ+i} − Σ_i V_{α(ℓ+i+p)} = (p−1)(q−1)/2 − ℓ
    std::int64_t rest = 0;
    for (std::int64_t i = 1; i < q; ++i) rest += get(ell + i);
    for (std::int64_t i = 0; i < q; ++i) rest -= get(alpha(ell + i + p, p * q));
    known[static_cast<std::size_t>(ell)] = (k + 1 - ell) - rest;
  }

  std::vector<std::int64_t> values;
  values.reserve(known.size());
  for (const auto& slot : known) values.push_back(*slot);
  try {
    return ViSequence(std::move(values));
  } catch (const InputError& e) {
    throw std::logic_error(std::string("reconstructed V is not a valid V sequence: ") + e.what());
  }
}

AlexanderPoly gen_alex_pq2(std::int64_t q) {
  require_pq2(q);
  const std::int64_t p = q + 2;
  const std::int64_t g = (p * q + 1) / 2;
  AlexanderPoly::Terms half;
  auto add = [&half](std::int64_t e, std::int64_t c) { half[e] += c; };

  add(g, 1);
  add(g - 1, -1);
  if (p % 4 == 3) {
    add(0, 1);
    for (std::int64_t j = 1; j <= (p - 3) / 4; ++j) {
      add(2 * j, 1);
      add(2 * j - 1, -1);
    }
  } else {
    for (std::int64_t j = 1; j <= (p - 1) / 4; ++j) {
      add(2 * j - 1, 1);
      add(2 * (j - 1), -1);
    }
  }
  for (std::int64_t i = 1; i <= (q - 1) / 2; ++i) {
    for (std::int64_t j = 1; j <= i; ++j) {
      add(g - i * p + 2 * j - 1, 1);
      add(g - i * p + 2 * j - 2, -1);
    }
  }
  std::erase_if(half, [](const auto& kv) { return kv.second == 0; });
  return AlexanderPoly::from_nonnegative_half(half);
}

std::optional<std::string> long_run_warning(const ViSequence& v, std::int64_t p, std::int64_t q) {
  const std::int64_t limit = (p + q) / 2 + 2;
  for (const auto& run : block_decomposition(v).runs) {
    if (run.length > limit) {
      return "run of " + std::to_string(run.length) + " equal V_i (value " + std::to_string(run.value) +
             ") exceeds (p+q)/2 + 2 = " + std::to_string(limit);
    }
  }
  return std::nullopt;
}

Pq2CrossCheck cross_check_pq2_detail(std::int64_t q) {
  require_pq2(q);
  const std::int64_t p = q + 2;
  const AlexanderPoly poly = gen_alex_pq2(q);
  return Pq2CrossCheck{q,
                       p,
                       reconstruct_vi_pq2(q),
                       vi_from_alex(poly),
                       thickness(poly),
                       thickness_lower_bound(p, q),
                       thickness_upper_bound(p, q)};
}

}  // namespace dinv
