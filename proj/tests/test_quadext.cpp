// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Quadratic field extension a + b sqrt(s) over the rationals, and its
// complexification. The case tables mix rational data with one surd (the
// complementary modulus), so all four operations plus exact comparison
// must close over this set.

#include <catch2/catch_amalgamated.hpp>

#include "qes/quadext.hpp"

using qes::QuadExt;
using qes::QuadExtC;
using qes::Rational;

TEST_CASE("field operations with a common radicand", "[quadext]") {
    const QuadExt a(Rational(1), Rational(1), Rational(2));  // 1 + sqrt(2)
    const QuadExt b(Rational(1), Rational(-1), Rational(2)); // 1 - sqrt(2)

    REQUIRE((a * b) == QuadExt(Rational(-1)));
    REQUIRE((a + b) == QuadExt(Rational(2)));
    REQUIRE((a - b) == QuadExt(Rational(0), Rational(2), Rational(2)));

    const QuadExt q = a / b; // (1+sqrt2)/(1-sqrt2) = -3 - 2 sqrt2
    REQUIRE(q == QuadExt(Rational(-3), Rational(-2), Rational(2)));
    REQUIRE((q * b) == a);

    REQUIRE_THROWS_AS(a / QuadExt(Rational(0)), qes::ZeroDenominator);
}

TEST_CASE("perfect square radicands collapse to rationals", "[quadext]") {
    // sqrt(1/4) = 1/2: the normal form must notice and become rational,
    // otherwise comparisons against plain rationals fail later.
    const QuadExt h(Rational(0), Rational(1), Rational(1, 4));
    REQUIRE(h.is_rational());
    REQUIRE(h.rat() == Rational(1, 2));

    const QuadExt g(Rational(3), Rational(2), Rational(9)); // 3 + 2*3
    REQUIRE(g.is_rational());
    REQUIRE(g.rat() == Rational(9));

    // b = 0 discards the radicand entirely.
    const QuadExt z(Rational(5), Rational(0), Rational(7));
    REQUIRE(z.is_rational());
    REQUIRE(z == QuadExt(Rational(5)));
}

TEST_CASE("mixed radicands are rejected", "[quadext]") {
    const QuadExt a(Rational(0), Rational(1), Rational(2));
    const QuadExt b(Rational(0), Rational(1), Rational(3));
    REQUIRE_THROWS_AS(a + b, qes::Error);
    REQUIRE_THROWS_AS(a * b, qes::Error);
}

TEST_CASE("rat() refuses genuinely irrational values", "[quadext]") {
    const QuadExt a(Rational(1), Rational(1), Rational(2));
    REQUIRE_FALSE(a.is_rational());
    REQUIRE_THROWS_AS(a.rat(), qes::Error);
    REQUIRE(a.value() == Catch::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("complexified arithmetic", "[quadext]") {
    const QuadExtC i(QuadExt(Rational(0)), QuadExt(Rational(1)));
    REQUIRE((i * i) == QuadExtC(-1));

    // (3 + 4i)/(4 - 3i) = i exactly
    const QuadExtC z(QuadExt(Rational(3)), QuadExt(Rational(4)));
    const QuadExtC w(QuadExt(Rational(4)), QuadExt(Rational(-3)));
    REQUIRE(z / w == i);
    REQUIRE((z / w) * w == z);

    // with a surd in both parts: (1 + i sqrt(2)) * (1 - i sqrt(2)) = 3
    const QuadExt r2(Rational(0), Rational(1), Rational(2));
    const QuadExtC u(QuadExt(Rational(1)), r2);
    const QuadExtC v(QuadExt(Rational(1)), QuadExt(Rational(0)) - r2);
    REQUIRE(u * v == QuadExtC(3));

    REQUIRE(u.is_real() == false);
    REQUIRE(QuadExtC(7).is_real());
    REQUIRE_THROWS_AS(z / QuadExtC(0), qes::ZeroDenominator);
}
