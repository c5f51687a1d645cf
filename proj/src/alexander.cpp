#include "dinv/alexander.hpp"

#include <charconv>
#include <set>

#include "dinv/error.hpp"

namespace dinv {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view context) {
  std::int64_t value = 0;
  auto begin = text.data();
  auto end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw InputError("malformed integer '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

AlexanderPoly::AlexanderPoly() : terms_{{0, 1}}, genus_(0) {}

AlexanderPoly::AlexanderPoly(Terms terms) : terms_(std::move(terms)) {
  genus_ = terms_.empty() ? 0 : terms_.rbegin()->first;
}

AlexanderPoly AlexanderPoly::from_terms(const Terms& terms) {
  Terms cleaned;
  for (const auto& [e, c] : terms) {
    if (c != 0) cleaned.emplace(e, c);
  }
  std::int64_t at_one = 0;
  for (const auto& [e, c] : cleaned) {
    auto mirror = cleaned.find(-e);
    if (mirror == cleaned.end() || mirror->second != c) {
      throw InputError("Alexander polynomial is not symmetric at exponent " + std::to_string(e));
    }
    at_one += c;
  }
  if (at_one != 1) {
    throw InputError("Alexander polynomial evaluates to " + std::to_string(at_one) + " at t = 1, expected 1");
  }
  return AlexanderPoly(std::move(cleaned));
}

AlexanderPoly AlexanderPoly::from_nonnegative_half(const Terms& half) {
  Terms full;
  for (const auto& [e, c] : half) {
    if (e < 0) throw InputError("negative exponent " + std::to_string(e) + " in non-negative half");
    full[e] = c;
    if (e > 0) full[-e] = c;
  }
  return from_terms(full);
}

std::int64_t AlexanderPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<std::int64_t> AlexanderPoly::exponents_descending() const {
  std::vector<std::int64_t> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.push_back(it->first);
  return out;
}

std::string AlexanderPoly::to_string() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend() && it->first >= 0; ++it) {
    if (!out.empty()) out += ',';
    out += std::to_string(it->first) + ":" + std::to_string(it->second);
  }
  return out;
}

AlexanderPoly parse_alex(std::string_view text) {
  AlexanderPoly::Terms half;
  std::string_view rest = trim(text);
  if (rest.empty()) throw InputError("empty Alexander polynomial");
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw InputError("expected 'exponent:coefficient', got '" + std::string(item) + "'");
    }
    std::int64_t e = parse_int(trim(item.substr(0, colon)), text);
    std::int64_t c = parse_int(trim(item.substr(colon + 1)), text);
    if (c == 0) throw InputError("zero coefficient at exponent " + std::to_string(e));
    if (!half.emplace(e, c).second) throw InputError("duplicate exponent " + std::to_string(e));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return AlexanderPoly::from_nonnegative_half(half);
}

bool validate_lspace(const AlexanderPoly& poly) {
  std::int64_t expected = 1;
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    if (it->second != expected) return false;
    expected = -expected;
  }
  return true;
}

}  // namespace dinv
