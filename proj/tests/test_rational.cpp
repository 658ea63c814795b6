#include <doctest.h>

#include "hhs/rational.hpp"

using namespace hhs;

TEST_CASE("rational parsing and canonical formatting") {
    CHECK(rationalToString(rationalFromString("123")) == "123");
    CHECK(rationalToString(rationalFromString("-4/5")) == "-4/5");
    CHECK(rationalToString(rationalFromString("2/4")) == "1/2");
    CHECK(rationalToString(rationalFromString("0")) == "0");
    CHECK(rationalToString(rational(-6, -4)) == "3/2");
    CHECK(rationalFromString("1/2") == rational(1, 2));
}

TEST_CASE("rational parse errors") {
    CHECK_THROWS_AS(rationalFromString("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rationalFromString(""), std::invalid_argument);
    CHECK_THROWS_AS(rationalFromString("a"), std::invalid_argument);
    CHECK_THROWS_AS(rationalFromString("+3"), std::invalid_argument);
    CHECK_THROWS_AS(rationalFromString("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(rationalFromString("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(rationalFromString("1/"), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays canonical") {
    Rational a = rational(1, 3), b = rational(1, 6);
    Rational s = a + b;
    CHECK(s.get_num() == 1);
    CHECK(s.get_den() == 2);
    CHECK(signOf(rational(-1, 7)) == -1);
    CHECK(signOf(rational(0)) == 0);
}
