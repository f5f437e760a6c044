#include "doctest.h"

#include "brieskorn/half_integer.hpp"
#include "brieskorn/rational.hpp"

using brieskorn::HalfInt;
using brieskorn::Rational;

TEST_CASE("rational normalization and accessors") {
    Rational r(6, -4);
    CHECK(r == Rational(-3, 2));
    CHECK(brieskorn::to_string(r.num()) == "-3");
    CHECK(brieskorn::to_string(r.den()) == "2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), brieskorn::DomainError);
}

TEST_CASE("floor and ceil on both signs") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
    CHECK(Rational(-4).floor() == -4);
}

TEST_CASE("arithmetic and comparisons") {
    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(a > b);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(a / Rational(0), brieskorn::DomainError);
}

TEST_CASE("parsing and printing") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(9, 6).to_string() == "3/2");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK_THROWS_AS(Rational::parse("x/2"), brieskorn::DomainError);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(brieskorn::Int128(1) << 126);
    CHECK_THROWS_AS(big * big, brieskorn::OverflowError);
    CHECK_THROWS_AS(big + big, brieskorn::OverflowError);
}

TEST_CASE("half integers render exactly") {
    CHECK(HalfInt::whole(9).to_string() == "9");
    CHECK(HalfInt::halves(15).to_string() == "15/2");
    CHECK(HalfInt::halves(-3).to_string() == "-3/2");
    CHECK(HalfInt::whole(4).as_integer() == 4);
    CHECK_THROWS_AS(HalfInt::halves(5).as_integer(), brieskorn::DomainError);
    CHECK(min(HalfInt::halves(15), HalfInt::halves(19)) == HalfInt::halves(15));
}
