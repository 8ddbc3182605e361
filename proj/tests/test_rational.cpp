#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur/rational.hpp"

using schur::Rational;

TEST_CASE("construction and reduction") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7).is_integer());
  CHECK(Rational(7).as_integer() == 7);
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::logic_error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering uses exact cross multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(10, 5) == Rational(2));
  CHECK(Rational(7, 2) >= Rational(7, 2));
  // values whose doubles would compare equal
  Rational big(INT64_C(3037000499), 1);
  CHECK(big * big > big * big - Rational(1));
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational huge(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(huge * Rational(3), std::overflow_error);
  CHECK_NOTHROW(huge + huge);  // exactly representable
}

TEST_CASE("string form") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}
