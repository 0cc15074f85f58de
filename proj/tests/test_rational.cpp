#include "doctest.h"
#include "modnet/errors.hpp"
#include "modnet/rational.hpp"

using namespace modnet;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+4") == Rational(4));
  CHECK(parse_rational("-2/7") == Rational(-2, 7));
  CHECK(parse_rational("2/4") == Rational(1, 2));  // canonicalized
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
  CHECK(parse_rational("2E2") == Rational(200));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
}

TEST_CASE("parse_rational rejects malformed tokens") {
  CHECK_THROWS_AS(parse_rational(""), DataError);
  CHECK_THROWS_AS(parse_rational("abc"), DataError);
  CHECK_THROWS_AS(parse_rational("1/0"), DataError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), DataError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), DataError);
  CHECK_THROWS_AS(parse_rational("1e"), DataError);
  CHECK_THROWS_AS(parse_rational("0.5/2"), DataError);
}

TEST_CASE("to_string renders canonical forms") {
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(Rational(-2, 7)) == "-2/7");
  CHECK(to_string(parse_rational("2/4")) == "1/2");
}

TEST_CASE("string round trip") {
  for (const char* tok : {"0", "17", "-3/8", "355/113"}) {
    const Rational r = parse_rational(tok);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("value_cast") {
  CHECK(value_cast<Rational>(Rational(2, 3)) == Rational(2, 3));
  CHECK(value_cast<double>(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(1, 4)) == 0.25);
}
