#include "genera/rational.hpp"

#include "doctest.h"

#include <sstream>
#include <stdexcept>

using namespace genera;

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational r(BigInt(4), BigInt(6));
    CHECK(r.numerator() == 2);
    CHECK(r.denominator() == 3);

    Rational neg(BigInt(1), BigInt(-2));
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);

    Rational zero(BigInt(0), BigInt(7));
    CHECK(zero.is_zero());
    CHECK(zero.denominator() == 1);
    CHECK(zero.str() == "0");
}

TEST_CASE("arithmetic is exact") {
    Rational third(1, 3), sixth(BigInt(1), BigInt(6));
    CHECK(third + sixth == Rational(BigInt(1), BigInt(2)));
    CHECK(third - third == Rational(0));
    CHECK(third * Rational(3) == Rational(1));
    CHECK(Rational(7) / Rational(2) == Rational(BigInt(7), BigInt(2)));
    CHECK(-third == Rational(BigInt(-1), BigInt(3)));
    CHECK(third.reciprocal() == Rational(3));
    CHECK(Rational(BigInt(-5), BigInt(8)).abs() == Rational(BigInt(5), BigInt(8)));
    CHECK(pow(Rational(BigInt(-2), BigInt(3)), 3) == Rational(BigInt(-8), BigInt(27)));
    CHECK(pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("comparisons use exact value") {
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(BigInt(1), BigInt(3)));
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(5) >= Rational(5));
    CHECK(Rational(BigInt(10), BigInt(3)) > Rational(3));
}

TEST_CASE("text round trip and canonical form") {
    for (const char* s : {"0", "1", "-1", "128", "7/45", "-1/1440", "62/945", "-691/2730"}) {
        Rational r = Rational::parse(s);
        CHECK(r.str() == s);
        std::ostringstream os;
        os << r;
        CHECK(os.str() == s);
    }
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("1/-2") == Rational::parse("-1/2"));
    CHECK(Rational::parse("-0").str() == "0");
}

TEST_CASE("malformed input and zero denominators throw") {
    CHECK_THROWS_AS(Rational::parse(""), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("a"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("/2"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(factorial(12) == BigInt("479001600"));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 7) == 120);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(pow2(0) == 1);
    CHECK(pow2(10) == 1024);
    CHECK(pow2(64) == BigInt("18446744073709551616"));
}
