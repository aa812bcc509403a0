#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "normext/rational.hpp"

using normext::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(6, 8).num() == 3);
    CHECK(Rational(6, 8).den() == 4);
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 5).num() == 0);
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational(7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("predicates") {
    CHECK(Rational(0, 9).is_zero());
    CHECK_FALSE(Rational(1, 9).is_zero());
    CHECK(Rational(-1, 9).is_negative());
    CHECK_FALSE(Rational(1, 9).is_negative());
    CHECK(Rational(8, 4).is_integer());
    CHECK_FALSE(Rational(8, 3).is_integer());
}

TEST_CASE("exact field arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
    CHECK(Rational(3, 4) / Rational(9, 2) == Rational(1, 6));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(5, 7).abs() == Rational(5, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

    Rational acc(0);
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc == Rational(1));

    Rational x(7, 12);
    x -= Rational(1, 12);
    CHECK(x == Rational(1, 2));
    x *= Rational(4);
    CHECK(x == Rational(2));
    x /= Rational(8);
    CHECK(x == Rational(1, 4));
}

TEST_CASE("total order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 5) > Rational(4, 3));
    // Comparison is exact even where doubles would tie.
    CHECK(Rational(1'000'000'001, 3'000'000'000) > Rational(1, 3));
}

TEST_CASE("parse and render round-trips") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(0).str() == "0");
    for (const char* text : {"0", "5", "-5", "1/2", "-17/25", "101/13"})
        CHECK(Rational::parse(Rational::parse(text).str()).str() == text);

    std::ostringstream os;
    os << Rational(-7, 3);
    CHECK(os.str() == "-7/3");
}

TEST_CASE("malformed text is rejected") {
    for (const char* text : {"", " ", "a", "1/", "/2", "1/0", "1/2/3", "1.5", "2 /3"})
        CHECK_THROWS_AS(Rational::parse(text), std::invalid_argument);
}

TEST_CASE("64-bit overflow is a loud error, not wraparound") {
    const Rational big(1'000'000'000'000LL);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    const Rational huge(9'000'000'000'000'000'000LL);
    CHECK_THROWS_AS(huge + huge, std::overflow_error);
    // Reduction can keep in-range results representable.
    CHECK(Rational(1, 1'000'000'000'000LL) * Rational(1'000'000'000'000LL) == Rational(1));
}

TEST_CASE("to_double is for reporting only") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(-3, 4).to_double() == -0.75);
}
