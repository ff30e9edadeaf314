#include "doctest.h"
#include "equidiff/rational.hpp"

using equidiff::Rational;

TEST_CASE("rational reduction and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("floor behaves on negatives") {
    CHECK(Rational(3, 2).floor() == 1);
    CHECK(Rational(-1, 3).floor() == -1);
    CHECK(Rational(-4, 2).floor() == -2);
    CHECK(Rational(0).floor() == 0);
    CHECK(Rational(7, 7).floor() == 1);
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(5) > Rational(9, 2));
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(5), std::overflow_error);
}
