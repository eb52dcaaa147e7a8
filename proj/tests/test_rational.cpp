#include <doctest.h>

#include <random>

#include "strongmatch/rational.hpp"

using namespace strongmatch;

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(3, -6).str() == "-1/2");  // denominator sign folds into numerator
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parsing and printing") {
    CHECK(Rational::parse("5/3").str() == "5/3");
    CHECK(Rational::parse("-7/14").str() == "-1/2");
    CHECK(Rational::parse("42").str() == "42");
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1) / Rational(3) == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK(Rational(1, 3) < Rational(1, 2));

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 60);
    for (int i = 0; i < 1000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("powers of ten") {
    CHECK(pow10(0) == Rational(1));
    CHECK(pow10(3) == Rational(1000));
    CHECK(pow10(-2) == Rational(1, 100));
}

TEST_CASE("half-integers") {
    HalfInt h = HalfInt::half();
    CHECK(h.to_rational() == Rational(1, 2));
    CHECK((h + h).is_integer());
    CHECK((h + h).to_rational() == Rational(1));
    CHECK((-h).str() == "-1/2");
    CHECK(HalfInt::whole(3) - h == HalfInt::from_doubled(5));
    CHECK(HalfInt().is_zero());
    CHECK(h > HalfInt());
    // Lossless round trip through Rational.
    HalfInt x = HalfInt::from_doubled(mpz_class(-17));
    CHECK(x.to_rational() == Rational(-17, 2));
}
