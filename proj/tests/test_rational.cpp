#include <doctest.h>

#include <random>

#include "universalis/rational.hpp"

using universalis::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).den() > 0);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("parse accepts p, p/q, -p/q only") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("11499999/11500000") == Rational(11499999, 11500000));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("a/b"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse("1/"));
}

TEST_CASE("str round-trips") {
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(2).str() == "2");
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK(Rational::parse(Rational(-7, 12).str()) == Rational(-7, 12));
}

TEST_CASE("scaling num and den by a common factor gives identical results") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    std::uniform_int_distribution<long> scale(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const long n = num(rng), d = den(rng), k = scale(rng);
        const Rational a(n, d);
        const Rational b(n * k, d * k);
        CHECK(a == b);
        CHECK(a.num() == b.num());
        CHECK(a.den() == b.den());
        const Rational c(num(rng), den(rng));
        CHECK(a + c == b + c);
        CHECK(a * c == b * c);
    }
}
