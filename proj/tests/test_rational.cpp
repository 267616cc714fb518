#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cheeger_lab/errors.hpp"
#include "cheeger_lab/rational.hpp"

using namespace cheeger_lab;

TEST_CASE("parse_rational accepts fractions, decimals and exponents") {
    CHECK(parse_rational("3/7") == Rat(3, 7));
    CHECK(parse_rational("-2") == Rat(-2));
    CHECK(parse_rational("0.25") == Rat(1, 4));
    CHECK(parse_rational("1.5e-2") == Rat(3, 200));
    CHECK(parse_rational("2e3") == Rat(2000));
    CHECK(parse_rational("-0.5") == Rat(-1, 2));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1//2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("fraction rendering") {
    CHECK(to_fraction_string(Rat(1, 2)) == "1/2");
    CHECK(to_fraction_string(Rat(-3, 4)) == "-3/4");
    CHECK(to_fraction_string(Rat(5)) == "5");
    CHECK(to_fraction_string(Rat(0)) == "0");
}

TEST_CASE("decimal rendering has at least 12 significant digits") {
    std::string s = to_decimal_string(Rat(1, 3));
    CHECK(s.substr(0, 6) == "0.3333");
    int digits = 0;
    for (char c : s)
        if (c >= '0' && c <= '9') ++digits;
    CHECK(digits >= 12);
    CHECK(to_double(Rat(1, 2)) == doctest::Approx(0.5));
}

TEST_CASE("parse inverts emit") {
    for (Rat r : {Rat(22, 7), Rat(-9, 13), Rat(0), Rat(100000, 3)})
        CHECK(parse_rational(to_fraction_string(r)) == r);
}
