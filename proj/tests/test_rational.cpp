#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slc/rational.hpp"

using slc::Rational;

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    Rational r(12, 484);
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 121);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(3, 22), b(4, 22);
    CHECK(a * a == Rational(9, 484));
    CHECK(a * b == Rational(12, 484));
    CHECK(a * a < a * b);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
    CHECK(-Rational(2, 5) == Rational(-2, 5));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("parse accepts fractions, integers and finite decimals") {
    CHECK(Rational::parse("3/22") == Rational(3, 22));
    CHECK(Rational::parse(" 4 ") == Rational(4));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("0.05") == Rational(1, 20));
    CHECK(Rational::parse("2.25") == Rational(9, 4));
    CHECK(Rational::parse("-.5") == Rational(-1, 2));
    CHECK(Rational::parse("+7") == Rational(7));
    for (const char* bad : {"", "1/0", "abc", "1/-2", "1.2.3", "1e5", "/3", "3/", "."})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("string forms") {
    CHECK(Rational(9, 484).str() == "9/484");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(2).decimal_str() == "2.0");
    CHECK(Rational(1, 20).decimal_str() == "0.05");
    CHECK(Rational(-9, 4).decimal_str() == "-2.25");
    CHECK(Rational(0).decimal_str() == "0.0");
    CHECK(Rational(1, 3).decimal_str() == "0.33333333333333331");
    CHECK(slc::over_common_denominator(Rational(9, 484), Rational(12, 484)) ==
          std::pair<std::string, std::string>{"9/484", "12/484"});
    CHECK(slc::over_common_denominator(Rational(2), Rational(3)) == std::pair<std::string, std::string>{"2", "3"});
}

TEST_CASE("str/parse round trip on random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    for (int k = 0; k < 500; ++k) {
        const Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse(Rational(7, 40).decimal_str()) == Rational(7, 40));
}
