#include <doctest.h>

#include <random>

#include "gravfock/rational.h"

using namespace gravfock;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3/4") == Rational(-3) / 4);
  CHECK(parse_rational("0.125") == Rational(1) / 8);
  CHECK(parse_rational("2.5e-3") == Rational(1) / 400);
  CHECK(parse_rational("1e2") == Rational(100));
  CHECK(parse_rational("007") == Rational(7));
  CHECK(parse_rational("0.0625") == Rational(1) / 16);
  CHECK(parse_rational("010/08") == Rational(5) / 4);
}

TEST_CASE("parse_rational rejects junk") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("rational printing round-trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 97);
  for (int i = 0; i < 500; ++i) {
    const Rational q = Rational(num(rng)) / den(rng);
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("minkowski square uses the mostly-minus metric") {
  CHECK(minkowski_square({Rational(5), Rational(3), Rational(0), Rational(0)}) == 16);
  CHECK(minkowski_square({Rational(1), Rational(1), Rational(1), Rational(0)}) == -1);
}

TEST_CASE("complex rational field operations") {
  const ComplexRational a(Rational(1), Rational(2)), b(Rational(3), Rational(-1));
  CHECK(a * b == ComplexRational(Rational(5), Rational(5)));
  CHECK((a / b) * b == a);
  CHECK(a.conj() == ComplexRational(Rational(1), Rational(-2)));
  CHECK(ComplexRational::i() * ComplexRational::i() == ComplexRational(-1));
  CHECK_THROWS_AS(a / ComplexRational(0), std::domain_error);
  CHECK(to_string(ComplexRational(Rational(1) / 2, Rational(3))) == "(1/2+3i)");
  CHECK(to_string(ComplexRational(Rational(0), Rational(-1))) == "-i");
}
