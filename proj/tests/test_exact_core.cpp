#include <doctest.h>

#include "dinv/alexander.hpp"
#include "dinv/error.hpp"
#include "dinv/rational.hpp"
#include "test_support.hpp"

using namespace dinv;

TEST_CASE("rational stays in lowest terms with positive denominator") {
  Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(r.to_string() == "-3/4");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("rational arithmetic and ordering") {
  const Rational a(1, 4), b(-1, 6);
  CHECK((a + b) == Rational(1, 12));
  CHECK((a - b) == Rational(5, 12));
  CHECK((a * b) == Rational(-1, 24));
  CHECK((a / b) == Rational(-3, 2));
  CHECK(b < a);
  CHECK(-a == Rational(-1, 4));
  CHECK_THROWS_AS(a / Rational(0), InputError);
}

TEST_CASE("rational text round trip") {
  for (const char* s : {"0", "7", "-5/12", "1/6", "-98765432109876543210987654321/1000000000000000000000000000000"}) {
    CHECK(Rational::parse(s).to_string() == s);
  }
  CHECK(Rational::parse("4/8").to_string() == "1/2");
  CHECK_THROWS_AS(Rational::parse("1/x"), InputError);
  CHECK_THROWS_AS(Rational::parse(""), InputError);
  CHECK_THROWS_AS(Rational::parse("2/0"), InputError);
}

TEST_CASE("property: (x + y) - y == x for random rationals") {
  for (int trial = 0; trial < 2000; ++trial) {
    const Rational x(testing::uniform(-1'000'000, 1'000'000), testing::uniform(1, 1'000'000));
    const Rational y(testing::uniform(-1'000'000, 1'000'000), testing::uniform(1, 1'000'000));
    CHECK(((x + y) - y) == x);
    CHECK(Rational::parse((x * y).to_string()) == x * y);
    CHECK((x * y).denominator() > 0);
  }
}

TEST_CASE("parse_alex symmetrizes the non-negative half") {
  const auto trefoil = parse_alex("1:1,0:-1");
  CHECK(trefoil.genus() == 1);
  CHECK(trefoil.terms() == AlexanderPoly::Terms{{-1, 1}, {0, -1}, {1, 1}});
  CHECK(trefoil == AlexanderPoly::from_terms({{-1, 1}, {0, -1}, {1, 1}}));

  const auto unknot = parse_alex("0:1");
  CHECK(unknot.genus() == 0);
  CHECK(unknot == AlexanderPoly());

  CHECK(parse_alex(" 0:-1 , 1:1 ").to_string() == "1:1,0:-1");
}

TEST_CASE("parse_alex rejects invalid input") {
  CHECK_THROWS_AS(parse_alex("1:1"), InputError);          // Δ(1) = 2
  CHECK_THROWS_AS(parse_alex("1:1,1:1,0:-1"), InputError);  // duplicate exponent
  CHECK_THROWS_AS(parse_alex("1:0,0:1"), InputError);       // zero coefficient
  CHECK_THROWS_AS(parse_alex("-1:1,0:-1"), InputError);     // negative exponent
  CHECK_THROWS_AS(parse_alex("1:1;0:-1"), InputError);
  CHECK_THROWS_AS(parse_alex(""), InputError);
  CHECK_THROWS_AS(AlexanderPoly::from_terms({{1, 1}, {0, -1}}), InputError);  // not symmetric
}

TEST_CASE("validate_lspace") {
  CHECK(validate_lspace(parse_alex("1:1,0:-1")));
  CHECK_FALSE(validate_lspace(parse_alex("2:1,1:1,0:-3")));
  CHECK(validate_lspace(parse_alex("0:1")));
  CHECK_FALSE(validate_lspace(parse_alex("1:-1,0:3")));          // figure eight: top coefficient −1
  CHECK(validate_lspace(parse_alex("2:1,1:-1,0:1")));            // T(2,5)
  CHECK_FALSE(validate_lspace(parse_alex("3:1,2:-1,1:-1,0:3")));  // two −1 in a row
}
