// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Jacobi elliptic functions by the descending Landen transformation and
// the arithmetic-geometric mean. Reference values were produced with
// mpmath at 50 digits; identities are checked on dense grids.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qes/elliptic.hpp"

using qes::Modulus;
using qes::Rational;

namespace {

struct TripleRef {
    double x, k2, sn, cn, dn;
};

// mpmath.ellipfun at 50 digits, rounded to 20.
const TripleRef kTriples[] = {
    {0.37, 0.25, 0.35970303853513629651, 0.93306683794280796019, 0.98369376892259898218},
    {1.0, 0.25, 0.82263557812986235968, 0.56856899809517148994, 0.91149200566913190034},
    {2.6, 0.25, 0.6849885025423048761, -0.72855387678939076955, 0.9395199241347746408},
    {0.37, 0.5, 0.35779494306719575205, 0.93380018136405507471, 0.96746647970757678092},
    {1.3, 0.5, 0.92044647421001781143, 0.39086863280947348992, 0.75920296631215391213},
    {3.9, 0.5, -0.19010297581780670341, -0.9817641562947867164, 0.99092402801254506661},
    {-0.8, 0.5, -0.69093485086643876128, 0.72291702971929775126, 0.8725276591198046451},
    {0.61, 0.75, 0.55130226952301460948, 0.83430558407502784548, 0.87866339158637991913},
    {2.0, 0.75, 0.99692066188893455094, 0.07841679602565153257, 0.50459081979778078251},
    {5.5, 0.75, -0.85737051233236831306, -0.51469972273446220928, 0.6698409165146596252},
    {0.9, 0.9, 0.72322792551088531911, 0.69060941766038878442, 0.72749380133792149351},
    {-2.2, 0.9, -0.99255066626025817299, 0.12183256915257757986, 0.33668807138906159689},
};

} // namespace

TEST_CASE("complete elliptic integral against mpmath", "[elliptic]") {
    struct {
        double k2, K;
    } ref[] = {
        {0.1, 1.6124413487202193982},  {0.25, 1.6857503548125960429}, {0.5, 1.8540746773013719184},
        {0.75, 2.1565156474996432354}, {0.9, 2.5780921133481731882},  {1e-10, 1.5707963268341665274},
    };
    for (const auto& r : ref) {
        const Modulus m(r.k2);
        REQUIRE(qes::complete_K(m) == Catch::Approx(r.K).epsilon(2e-15));
    }
}

TEST_CASE("modulus construction and exactness tracking", "[elliptic]") {
    REQUIRE_THROWS_AS(Modulus(0.0), qes::Error);
    REQUIRE_THROWS_AS(Modulus(1.0), qes::Error);
    REQUIRE_THROWS_AS(Modulus(-0.3), qes::Error);
    REQUIRE_THROWS_AS(Modulus(1.5), qes::Error);
    REQUIRE_THROWS_AS(Modulus(Rational(5, 4)), qes::Error);

    const Modulus mr(Rational(3, 4));
    REQUIRE(mr.has_exact());
    REQUIRE(mr.exact_k_sq() == Rational(3, 4));
    REQUIRE(mr.exact_kp_sq() == Rational(1, 4));
    REQUIRE(mr.k_sq() == 0.75);
    REQUIRE(mr.kp_sq() == 0.25);

    const Modulus md(0.3);
    REQUIRE_FALSE(md.has_exact());
    REQUIRE(qes::to_double(md.exact_k_sq()) == 0.3);
    REQUIRE(md.kp_sq() == Catch::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("jacobi triples against mpmath", "[elliptic]") {
    for (const auto& r : kTriples) {
        const Modulus m(r.k2);
        const auto j = qes::jacobi(r.x, m);
        REQUIRE(j.sn == Catch::Approx(r.sn).margin(1e-13));
        REQUIRE(j.cn == Catch::Approx(r.cn).margin(1e-13));
        REQUIRE(j.dn == Catch::Approx(r.dn).margin(1e-13));
    }
}

TEST_CASE("special values at 0 and K", "[elliptic]") {
    for (double k2 : {0.25, 0.5, 0.75}) {
        const Modulus m(k2);
        const auto j0 = qes::jacobi(0.0, m);
        REQUIRE(j0.sn == Catch::Approx(0.0).margin(1e-15));
        REQUIRE(j0.cn == Catch::Approx(1.0).margin(1e-15));
        REQUIRE(j0.dn == Catch::Approx(1.0).margin(1e-15));
        const auto jK = qes::jacobi(m.K(), m);
        REQUIRE(jK.sn == Catch::Approx(1.0).margin(1e-14));
        REQUIRE(jK.cn == Catch::Approx(0.0).margin(1e-14));
        REQUIRE(jK.dn == Catch::Approx(m.kp()).epsilon(1e-13));
    }
}

TEST_CASE("pythagorean identities on a dense grid", "[elliptic]") {
    for (double k2 : {0.25, 0.5, 0.75, 0.9}) {
        const Modulus m(k2);
        double worst1 = 0.0, worst2 = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const double x = -12.0 + 24.0 * i / 9999.0;
            const auto j = qes::jacobi(x, m);
            worst1 = std::max(worst1, std::abs(j.sn * j.sn + j.cn * j.cn - 1.0));
            worst2 = std::max(worst2, std::abs(j.dn * j.dn + k2 * j.sn * j.sn - 1.0));
        }
        REQUIRE(worst1 <= 1e-13);
        REQUIRE(worst2 <= 1e-13);
    }
}

TEST_CASE("translation by half and full periods", "[elliptic]") {
    for (double k2 : {0.25, 0.5, 0.9}) {
        const Modulus m(k2);
        const double K = m.K();
        for (int i = 0; i < 200; ++i) {
            const double x = -5.0 + 10.0 * i / 199.0;
            const auto j = qes::jacobi(x, m);
            const auto j2 = qes::jacobi(x + 2.0 * K, m);
            const auto j4 = qes::jacobi(x + 4.0 * K, m);
            REQUIRE(j2.sn == Catch::Approx(-j.sn).margin(1e-11));
            REQUIRE(j2.cn == Catch::Approx(-j.cn).margin(1e-11));
            REQUIRE(j2.dn == Catch::Approx(j.dn).margin(1e-11));
            REQUIRE(j4.sn == Catch::Approx(j.sn).margin(1e-11));
            REQUIRE(j4.cn == Catch::Approx(j.cn).margin(1e-11));
        }
    }
}

TEST_CASE("amplitude function is continuous with derivative dn", "[elliptic]") {
    const Modulus m(0.6);
    const double K = m.K();
    REQUIRE(qes::jacobi_am(0.0, m) == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(qes::jacobi_am(K, m) == Catch::Approx(M_PI / 2).epsilon(1e-13));
    REQUIRE(qes::jacobi_am(2.0 * K, m) == Catch::Approx(M_PI).epsilon(1e-13));
    REQUIRE(qes::jacobi_am(-2.0 * K, m) == Catch::Approx(-M_PI).epsilon(1e-13));
    REQUIRE(qes::jacobi_am(8.0 * K, m) == Catch::Approx(4.0 * M_PI).epsilon(1e-13));

    double prev = qes::jacobi_am(-6.0 * K, m);
    for (int i = 1; i < 2000; ++i) {
        const double x = -6.0 * K + 12.0 * K * i / 1999.0;
        const double cur = qes::jacobi_am(x, m);
        REQUIRE(cur > prev); // strictly increasing, no branch jumps
        prev = cur;
    }
    const double h = 1e-5;
    for (double x : {0.3, 1.7, 2.0 * K - 0.01, 2.0 * K + 0.01, 5.9}) {
        const double d = (qes::jacobi_am(x + h, m) - qes::jacobi_am(x - h, m)) / (2.0 * h);
        REQUIRE(d == Catch::Approx(qes::jacobi(x, m).dn).epsilon(1e-8));
    }
}

TEST_CASE("phase of cn + i kp sn has modulus dn and derivative kp/dn", "[elliptic]") {
    const Modulus m(0.7);
    const double K = m.K();
    const double kp = m.kp();
    REQUIRE(qes::dn_phase(0.0, m) == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(qes::dn_phase(2.0 * K, m) == Catch::Approx(M_PI).epsilon(1e-13));
    REQUIRE(qes::dn_phase(4.0 * K, m) == Catch::Approx(2.0 * M_PI).epsilon(1e-13));

    double prev = qes::dn_phase(-4.0 * K, m);
    for (int i = 1; i < 2000; ++i) {
        const double x = -4.0 * K + 8.0 * K * i / 1999.0;
        const double cur = qes::dn_phase(x, m);
        REQUIRE(cur > prev);
        prev = cur;
        const auto j = qes::jacobi(x, m);
        REQUIRE(std::hypot(j.cn, kp * j.sn) == Catch::Approx(j.dn).epsilon(1e-12));
    }
    const double h = 1e-5;
    for (double x : {0.4, K - 0.02, K + 0.02, 2.0 * K - 0.01, 3.3}) {
        const double d = (qes::dn_phase(x + h, m) - qes::dn_phase(x - h, m)) / (2.0 * h);
        REQUIRE(d == Catch::Approx(kp / qes::jacobi(x, m).dn).epsilon(1e-8));
    }
}
