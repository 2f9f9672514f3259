#include "galdens/error.hpp"
#include "galdens/rational.hpp"

#include <doctest.h>

using namespace galdens;

TEST_CASE("parse_rational accepts fractions, integers and exact decimals") {
    CHECK(parse_rational("17/32") == Rational(17, 32));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("0.37") == Rational(37, 100));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == Rational(250));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("0.3.1"), Error);
}

TEST_CASE("abs_diff and to_string") {
    CHECK(abs_diff(Rational(1, 3), Rational(1, 2)) == Rational(1, 6));
    CHECK(to_string(make_rational(10, 4)) == "5/2");
    CHECK(to_string(make_rational(6, 3)) == "2");
}
