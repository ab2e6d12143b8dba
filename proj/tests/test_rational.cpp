// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Exact rational arithmetic helpers: parsing, double conversion, integer
// and half-odd-integer predicates, exact square roots.

#include <catch2/catch_amalgamated.hpp>

#include "qes/rational.hpp"

using qes::Rational;

TEST_CASE("parse_rational handles fractions, integers and decimals", "[rational]") {
    auto r = qes::parse_rational("3/4");
    REQUIRE(r.value == Rational(3, 4));
    REQUIRE_FALSE(r.was_decimal);

    r = qes::parse_rational("-7/2");
    REQUIRE(r.value == Rational(-7, 2));
    REQUIRE_FALSE(r.was_decimal);

    r = qes::parse_rational("42");
    REQUIRE(r.value == Rational(42));
    REQUIRE_FALSE(r.was_decimal);

    r = qes::parse_rational("0.25");
    REQUIRE(r.value == Rational(1, 4));
    REQUIRE(r.was_decimal);

    r = qes::parse_rational("-0.125");
    REQUIRE(r.value == Rational(-1, 8));
    REQUIRE(r.was_decimal);

    r = qes::parse_rational("2.5e2");
    REQUIRE(r.value == Rational(250));
    REQUIRE(r.was_decimal);

    r = qes::parse_rational("1e-3");
    REQUIRE(r.value == Rational(1, 1000));
    REQUIRE(r.was_decimal);

    REQUIRE_THROWS_AS(qes::parse_rational("abc"), qes::Error);
    REQUIRE_THROWS_AS(qes::parse_rational("1/0"), qes::Error);
    REQUIRE_THROWS_AS(qes::parse_rational(""), qes::Error);
}

TEST_CASE("rational_from_double is exact", "[rational]") {
    const double xs[] = {0.5, -0.5, 0.1, 1.0 / 3.0, 1e-8, 3.75, -123456.789, 6.25e7};
    for (double x : xs) {
        const Rational r = qes::rational_from_double(x);
        REQUIRE(qes::to_double(r) == x);
    }
    REQUIRE(qes::rational_from_double(0.5) == Rational(1, 2));
    REQUIRE(qes::rational_from_double(0.75) == Rational(3, 4));
    REQUIRE(qes::rational_from_double(0.0) == Rational(0));
}

TEST_CASE("integer and half-odd-integer predicates", "[rational]") {
    REQUIRE(qes::is_integer(Rational(4)));
    REQUIRE(qes::is_integer(Rational(-3)));
    REQUIRE(qes::is_integer(Rational(6, 2)));
    REQUIRE_FALSE(qes::is_integer(Rational(1, 2)));

    REQUIRE(qes::is_nonneg_integer(Rational(0)));
    REQUIRE(qes::is_nonneg_integer(Rational(7)));
    REQUIRE_FALSE(qes::is_nonneg_integer(Rational(-1)));
    REQUIRE_FALSE(qes::is_nonneg_integer(Rational(3, 2)));

    REQUIRE(qes::is_half_odd_integer(Rational(1, 2)));
    REQUIRE(qes::is_half_odd_integer(Rational(-5, 2)));
    REQUIRE(qes::is_half_odd_integer(Rational(3, 2)));
    REQUIRE_FALSE(qes::is_half_odd_integer(Rational(2)));
    REQUIRE_FALSE(qes::is_half_odd_integer(Rational(1, 3)));

    REQUIRE(qes::integer_value(Rational(9)) == 9);
    REQUIRE(qes::integer_value(Rational(-2)) == -2);
}

TEST_CASE("to_string prints p/q form", "[rational]") {
    REQUIRE(qes::to_string(Rational(3, 4)) == "3/4");
    REQUIRE(qes::to_string(Rational(-3, 4)) == "-3/4");
    REQUIRE(qes::to_string(Rational(5)) == "5");
    REQUIRE(qes::to_string(Rational(0)) == "0");
}

TEST_CASE("exact integer and rational square roots", "[rational]") {
    using qes::Integer;
    REQUIRE(qes::exact_sqrt(Integer(49)).value() == 7);
    REQUIRE(qes::exact_sqrt(Integer(0)).value() == 0);
    REQUIRE(qes::exact_sqrt(Integer(1)).value() == 1);
    REQUIRE_FALSE(qes::exact_sqrt(Integer(50)).has_value());
    REQUIRE_FALSE(qes::exact_sqrt(Integer(-4)).has_value());

    REQUIRE(qes::exact_sqrt(Rational(9, 4)).value() == Rational(3, 2));
    REQUIRE(qes::exact_sqrt(Rational(1, 4)).value() == Rational(1, 2));
    REQUIRE_FALSE(qes::exact_sqrt(Rational(2, 3)).has_value());
    REQUIRE_FALSE(qes::exact_sqrt(Rational(-1, 4)).has_value());
}
