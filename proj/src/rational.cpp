#include "dinv/rational.hpp"

#include <algorithm>
#include <ostream>

#include "dinv/error.hpp"

namespace dinv {

namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "mpz_class(long) must hold int64_t");

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string s(text);
  bool ok = !s.empty();
  std::size_t start = (ok && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) ok = false;
  for (std::size_t i = start; ok && i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') ok = false;
  }
  if (!ok) throw InputError("malformed rational '" + std::string(whole) + "'");
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(to_mpz(num), to_mpz(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text), mpz_class(1));
  return Rational(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw InputError("division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

RationalMultiset make_multiset(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace dinv
