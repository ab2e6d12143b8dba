// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Numerical oracle. These tests pin the finite-difference Hill solver to
// problems with known answers (free particle, closed-form band edges) and
// then turn it around on the algebraic pipeline: every closed-form level
// must reappear in the numeric spectrum under the boundary condition its
// eigenfunction dictates.

#include <algorithm>
#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qes/eigenfunctions.hpp"
#include "qes/oracle.hpp"
#include "qes/spectra.hpp"

using qes::BoundaryCondition;
using qes::GridFunction;
using qes::Modulus;
using qes::PotentialSpec;
using qes::Rational;

namespace {

Rational rat(long long p, long long q = 1) { return Rational(p, q); }

// translation class of a realized state: sign of f(x + 2K) / f(x) probed
// where the state is large
BoundaryCondition class_of(const qes::RealEigenfunction& f, double period_2k) {
    double best = 0.0, ratio = 0.0;
    for (int i = 1; i < 64; ++i) {
        const double x = period_2k * i / 64.0;
        const double v = f(x);
        if (std::abs(v) > best) {
            best = std::abs(v);
            ratio = f(x + period_2k) / v;
        }
    }
    REQUIRE(best > 0.0);
    REQUIRE(std::abs(std::abs(ratio) - 1.0) < 1e-6);
    return ratio > 0.0 ? BoundaryCondition::Periodic : BoundaryCondition::Antiperiodic;
}

} // namespace

TEST_CASE("wave equation residual vanishes for the flat potential", "[oracle]") {
    const auto spec = qes::associated_lame_spec(rat(0), rat(0), Modulus(rat(1, 2)));
    const auto one = qes::sample_function([](double) { return 1.0; }, 0.0, 3.0, 129);
    REQUIRE(qes::residual_norm(spec, 0.0, one) == 0.0);

    const auto coarse = qes::sample_function([](double) { return 1.0; }, 0.0, 3.0, 65);
    REQUIRE_THROWS_AS(qes::residual_norm(spec, 0.0, coarse), qes::GridTooCoarse);
}

TEST_CASE("wave equation residual converges at second order on a closed-form state", "[oracle]") {
    // the dn cube solves the two-parameter problem with labels (3, 2) at
    // energy nine k squared
    const Modulus mod(rat(2, 5));
    const auto spec = qes::associated_lame_spec(rat(3), rat(2), mod);
    const double energy = 9.0 * mod.k_sq();
    const auto dn3 = [&mod](double x) {
        const double d = qes::jacobi(x, mod).dn;
        return d * d * d;
    };
    const double cell = 2.0 * mod.K();

    const double r1 = qes::residual_norm(spec, energy, qes::sample_function(dn3, 0.0, cell, 1025));
    const double r2 = qes::residual_norm(spec, energy, qes::sample_function(dn3, 0.0, cell, 2049));
    REQUIRE(r1 < 1e-3);
    REQUIRE(r2 < r1);
    const double order = std::log2(r1 / r2);
    REQUIRE(order > 1.9);
    REQUIRE(order < 2.5);

    // a detuned energy leaves a residual the grid cannot explain away
    const double wrong =
        qes::residual_norm(spec, energy + 0.1, qes::sample_function(dn3, 0.0, cell, 1025));
    REQUIRE(wrong > 0.05);
}

TEST_CASE("hill solver reproduces the free particle", "[oracle]") {
    const double period = 2.0 * std::acos(-1.0);
    const auto flat = [](double) { return 0.0; };

    const auto per = qes::band_edges_numeric(qes::hill_periodic(flat, period, 1024), 4);
    REQUIRE(std::abs(per[0]) < 1e-8);
    REQUIRE(std::abs(per[1] - 1.0) < 1e-6);
    REQUIRE(std::abs(per[2] - 1.0) < 1e-6);
    REQUIRE(std::abs(per[3] - 4.0) < 1e-5);

    const auto anti = qes::band_edges_numeric(qes::hill_antiperiodic(flat, period, 1024), 4);
    REQUIRE(std::abs(anti[0] - 0.25) < 1e-6);
    REQUIRE(std::abs(anti[1] - 0.25) < 1e-6);
    REQUIRE(std::abs(anti[2] - 2.25) < 1e-6);
    REQUIRE(std::abs(anti[3] - 2.25) < 1e-6);

    // infinite well of width pi: levels j squared with j = 1, 2, 3
    const auto well = qes::band_edges_numeric(qes::hill_dirichlet(flat, 0.0, period / 2.0, 1024), 3);
    REQUIRE(std::abs(well[0] - 1.0) < 1e-6);
    REQUIRE(std::abs(well[1] - 4.0) < 1e-6);
    REQUIRE(std::abs(well[2] - 9.0) < 1e-5);
}

TEST_CASE("hill solver guards its grid and its convergence claim", "[oracle]") {
    const auto flat = [](double) { return 0.0; };
    REQUIRE_THROWS_AS(qes::band_edges_numeric(qes::hill_periodic(flat, 1.0, 32), 2),
                      qes::GridTooCoarse);

    const Modulus mod(rat(3, 5));
    const auto spec = qes::associated_lame_spec(rat(2), rat(1), mod);
    const auto v = [spec](double x) { return qes::eval_potential(spec, x); };
    REQUIRE_THROWS_AS(
        qes::band_edges_numeric(qes::hill_periodic(v, 2.0 * mod.K(), 128), 3, 1e-14),
        qes::ConvergenceFailure);
}

TEST_CASE("raw hill eigenvalues converge at second order in the step", "[oracle]") {
    const Modulus mod(rat(3, 5));
    const auto spec = qes::associated_lame_spec(rat(2), rat(1), mod);
    const auto v = [spec](double x) { return qes::eval_potential(spec, x); };
    const auto problem = qes::hill_periodic(v, 2.0 * mod.K(), 256);

    const double e1 = qes::detail::hill_eigenvalues(problem, 1, 256).front();
    const double e2 = qes::detail::hill_eigenvalues(problem, 1, 512).front();
    const double e3 = qes::detail::hill_eigenvalues(problem, 1, 1024).front();
    const double order = std::log2(std::abs(e1 - e2) / std::abs(e2 - e3));
    REQUIRE(order > 1.9);
    REQUIRE(order < 2.1);
}

TEST_CASE("numeric spectrum interlaces with alternating translation classes", "[oracle]") {
    const Modulus mod(rat(11, 20));
    const auto spec = qes::associated_lame_spec(rat(3), rat(1), mod);
    const auto levels = qes::band_edges_for_spec(spec, 9);
    const BoundaryCondition want[9] = {
        BoundaryCondition::Periodic,     BoundaryCondition::Antiperiodic,
        BoundaryCondition::Antiperiodic, BoundaryCondition::Periodic,
        BoundaryCondition::Periodic,     BoundaryCondition::Antiperiodic,
        BoundaryCondition::Antiperiodic, BoundaryCondition::Periodic,
        BoundaryCondition::Periodic};
    for (int i = 0; i < 9; ++i) {
        INFO("level " << i);
        REQUIRE(levels[i].bc == want[i]);
        if (i > 0) REQUIRE(levels[i].value >= levels[i - 1].value);
        // a periodic and an antiperiodic edge never coincide, so the
        // boundary between classes is a strict step
        if (i > 0 && levels[i].bc != levels[i - 1].bc)
            REQUIRE(levels[i].value > levels[i - 1].value + 1e-6);
    }
}

TEST_CASE("lame tower of seven is the leading numeric spectrum", "[oracle]") {
    const Modulus mod(rat(1, 2));
    const auto spec = qes::associated_lame_spec(rat(3), rat(0), mod);
    auto spectrum = qes::solve_spec(spec);
    REQUIRE(spectrum.energies.size() == 7);
    const auto states = qes::realize_band_states(spec, spectrum);

    const auto numeric = qes::band_edges_for_spec(spec, 7, 4096);
    const BoundaryCondition want[7] = {
        BoundaryCondition::Periodic,     BoundaryCondition::Antiperiodic,
        BoundaryCondition::Antiperiodic, BoundaryCondition::Periodic,
        BoundaryCondition::Periodic,     BoundaryCondition::Antiperiodic,
        BoundaryCondition::Antiperiodic};
    for (std::size_t i = 0; i < 7; ++i) {
        INFO("level " << i);
        REQUIRE(std::abs(spectrum.energies[i].value - numeric[i].value) < 1e-3);
        REQUIRE(numeric[i].bc == want[i]);
        REQUIRE(class_of(states[i].states.front(), 2.0 * mod.K()) == want[i]);
    }
}

TEST_CASE("algebraic levels of a two-label tower match numeric edges by class", "[oracle]") {
    // with labels (3, 1) the seven closed-form levels are not the seven
    // lowest edges; each must still appear at its own place in the merged
    // spectrum under its own translation class
    const Modulus mod(rat(2, 5));
    const auto spec = qes::associated_lame_spec(rat(3), rat(1), mod);
    auto spectrum = qes::solve_spec(spec);
    REQUIRE(spectrum.energies.size() == 7);
    const auto states = qes::realize_band_states(spec, spectrum);

    const auto numeric = qes::band_edges_for_spec(spec, 12, 4096);
    int periodic_count = 0;
    for (std::size_t i = 0; i < spectrum.energies.size(); ++i) {
        const double e = spectrum.energies[i].value;
        const auto cls = class_of(states[i].states.front(), 2.0 * mod.K());
        if (cls == BoundaryCondition::Periodic) ++periodic_count;
        double best = 1e30;
        for (const auto& lvl : numeric)
            if (lvl.bc == cls) best = std::min(best, std::abs(lvl.value - e));
        INFO("level " << i << " energy " << e);
        REQUIRE(best < 1e-3);
    }
    REQUIRE(periodic_count == 5);
}

TEST_CASE("half odd doublets surface as degenerate antiperiodic clusters", "[oracle]") {
    const Modulus mod(rat(1, 2));

    // labels (1, 1/2): one doublet, energy (9 + k^2) / 4, invisible to the
    // one-period problem and doubly present over two periods
    {
        const auto spec = qes::associated_lame_spec(rat(1), rat(1, 2), mod);
        const double want = (9.0 + mod.k_sq()) / 4.0;
        const auto numeric = qes::band_edges_for_spec(spec, 8, 4096);
        std::vector<double> hits;
        for (const auto& lvl : numeric)
            if (std::abs(lvl.value - want) < 1e-3) {
                REQUIRE(lvl.bc == BoundaryCondition::Antiperiodic);
                hits.push_back(lvl.value);
            }
        REQUIRE(hits.size() == 2);
        REQUIRE(std::abs(hits[0] - hits[1]) < 1e-3);
    }

    // labels (2, 3/2): two doublets with surd energies
    {
        const auto spec = qes::associated_lame_spec(rat(2), rat(3, 2), mod);
        auto spectrum = qes::solve_spec(spec);
        REQUIRE(spectrum.energies.size() == 2);
        const auto numeric = qes::band_edges_for_spec(spec, 16, 4096);
        for (const auto& level : spectrum.energies) {
            REQUIRE(level.degeneracy == 2);
            std::vector<double> hits;
            for (const auto& lvl : numeric)
                if (std::abs(lvl.value - level.value) < 1e-3) {
                    REQUIRE(lvl.bc == BoundaryCondition::Antiperiodic);
                    hits.push_back(lvl.value);
                }
            INFO("energy " << level.value);
            REQUIRE(hits.size() == 2);
        }
    }
}

TEST_CASE("singular family ground states match their closed forms", "[oracle]") {
    const Modulus mod(rat(3, 10));

    const auto tan0 = qes::band_edges_for_spec(qes::tan_spec(0, mod), 1, 4096);
    REQUIRE(tan0.front().bc == BoundaryCondition::Dirichlet);
    REQUIRE(std::abs(tan0.front().value - (-2.0 * mod.kp_sq())) < 1e-3);

    const auto cot0 = qes::band_edges_for_spec(qes::cot_spec(0, mod), 1, 4096);
    REQUIRE(std::abs(cot0.front().value - (-2.0)) < 1e-3);
}

TEST_CASE("wronskian scale separates independent pairs from copies", "[oracle]") {
    const double period = 2.0 * std::acos(-1.0);
    const auto s = qes::sample_function([](double x) { return std::sin(x); }, 0.0, period, 1001);
    const auto c = qes::sample_function([](double x) { return std::cos(x); }, 0.0, period, 1001);
    const double independent = qes::wronskian_min(s, c);
    REQUIRE(independent > 0.5);
    REQUIRE(independent < 1.5);

    auto twice = s;
    for (double& v : twice.values) v *= 2.0;
    REQUIRE(qes::wronskian_min(s, twice) < 1e-12);

    const auto other = qes::sample_function([](double x) { return std::sin(x); }, 0.0, 1.0, 1001);
    REQUIRE_THROWS_AS(qes::wronskian_min(s, other), qes::Error);
}

TEST_CASE("realized doublet partners are numerically independent", "[oracle]") {
    const Modulus mod(rat(2, 5));
    const auto spec = qes::associated_lame_spec(rat(1), rat(1, 2), mod);
    auto spectrum = qes::solve_spec(spec);
    auto states = qes::realize_band_states(spec, spectrum);
    REQUIRE(states.size() == 1);
    REQUIRE(states.front().states.size() == 2);

    const double cell = 4.0 * mod.K();
    const auto& f = states.front().states[0];
    const auto& g = states.front().states[1];
    const auto gf = qes::sample_function([&f](double x) { return f(x); }, 0.0, cell, 2049);
    const auto gg = qes::sample_function([&g](double x) { return g(x); }, 0.0, cell, 2049);
    REQUIRE(qes::wronskian_min(gf, gg) > 1e-3);
}

TEST_CASE("potentials approach their closed-form limits", "[oracle]") {
    const Modulus any(rat(1, 2));

    const auto al = qes::associated_lame_spec(rat(3), rat(2), any);
    REQUIRE(qes::limit_compare(al, qes::LimitDirection::KToZero) < 1e-6);
    REQUIRE(qes::limit_compare(al, qes::LimitDirection::KToOne) < 1e-3);

    const auto al_half = qes::associated_lame_spec(rat(2), rat(3, 2), any);
    REQUIRE(qes::limit_compare(al_half, qes::LimitDirection::KToZero) < 1e-6);
    REQUIRE(qes::limit_compare(al_half, qes::LimitDirection::KToOne) < 1e-3);

    REQUIRE(qes::limit_compare(qes::tan_spec(1, any), qes::LimitDirection::KToZero) < 1e-3);
    REQUIRE(qes::limit_compare(qes::cot_spec(2, any), qes::LimitDirection::KToOne) < 1e-3);

    REQUIRE_THROWS_AS(qes::limit_compare(qes::tan_spec(1, any), qes::LimitDirection::KToOne),
                      qes::Error);
    REQUIRE_THROWS_AS(qes::limit_compare(qes::cot_spec(2, any), qes::LimitDirection::KToZero),
                      qes::Error);
}
