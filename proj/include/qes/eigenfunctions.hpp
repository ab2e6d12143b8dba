// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Band-edge eigenfunctions assembled from terminating series. At each root
// of the critical polynomial the three-term recursion truncates, and the
// finite series in the mapped coordinate multiplies the gauge factor into a
// closed-form solution of the wave equation.
//
// The assembly is stated in the literature as
//
//   psi(x) = mu(x) (xi - xi2)^n sum_j P_j / j! ((xi - xi1) / (xi - xi2))^j
//
// with xi = sn/cn for the two-parameter cases, which blows up where cn
// vanishes. The pole is removable because mu carries the factor cn^n.
// Regrouping term by term,
//
//   mu (xi - xi1)^j (xi - xi2)^{n-j} = W (sn - xi1 cn)^j (sn - xi2 cn)^{n-j}
//
// with W = mu / cn^n, leaves every factor finite on the whole real line.
// Production evaluation uses the regrouped form; the literal form is kept
// so the two can be cross-checked against each other near the poles, which
// guards the hand-derived W of each case.
//
// Half-odd gauge powers follow continuous phase branches: (cn + i k' sn)^c
// is dn^c exp(i c Phi) with Phi the unwrapped phase of cn + i k' sn, and
// (cn + i sn)^c is exp(i c am) with am the unwrapped amplitude. Principal
// value powers would cut the line into branch cells and break smoothness
// at the seams.

#ifndef QES_EIGENFUNCTIONS_HPP
#define QES_EIGENFUNCTIONS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qes/cases.hpp"
#include "qes/elliptic.hpp"
#include "qes/errors.hpp"
#include "qes/potentials.hpp"
#include "qes/rational.hpp"
#include "qes/recurrence.hpp"
#include "qes/spectra.hpp"

namespace qes {

// Everything needed to evaluate one band-edge state. The series entries
// are P_j / j!, the quartic roots are carried as plain complex numbers,
// and x_shift absorbs the half-period translation of swapped spin labels.
struct EigenfunctionDescriptor {
    int case_id = 0;
    int n = 0;
    Rational m, l;
    double energy = 0.0;
    std::vector<double> series;          // P_j / j!, j = 0..n
    int phase_sign = 0;                  // sign of the complex gauge phase; 0 for real gauges
    std::complex<double> xi1{0.0, 0.0};
    std::complex<double> xi2{0.0, 0.0};
    double x_shift = 0.0;
};

// Builds the descriptor for one case at one energy. The recursion is run
// one step past the cutoff; a nonzero overshoot relative to the natural
// scale of the last step means the energy is not a root of the critical
// polynomial and no terminating state exists there.
inline EigenfunctionDescriptor make_descriptor(const AlgebraizationCase& c, double energy,
                                               double x_shift = 0.0,
                                               double termination_tol = 1e-9) {
    const std::vector<double> p = raw_sequence(c, energy);
    const int n = c.n;
    const double a_n = std::abs(to_double(detail::coeff_a(c, n)));
    const double g_n = std::abs(to_double(detail::coeff_g(c, n)));
    const double lam_n = std::abs(to_double(detail::coeff_lambda(c, n)));
    double pmax = 0.0;
    for (int j = 0; j <= n; ++j) pmax = std::max(pmax, std::abs(p[j]));
    const double scale =
        ((std::abs(energy) + lam_n) * std::abs(p[n]) + (n > 0 ? g_n * std::abs(p[n - 1]) : 0.0)) / a_n +
        pmax;
    if (std::abs(p[n + 1]) > termination_tol * scale)
        throw Error("make_descriptor: series does not terminate, the energy is not a critical root");

    EigenfunctionDescriptor d;
    d.case_id = c.case_id;
    d.n = n;
    d.m = c.m;
    d.l = c.l;
    d.energy = energy;
    d.x_shift = x_shift;
    d.series.resize(static_cast<std::size_t>(n) + 1);
    double fact = 1.0;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) fact *= j;
        d.series[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)] / fact;
    }
    if (c.case_id == 3 || c.case_id == 5)
        d.phase_sign = 1;
    else if (c.case_id == 4 || c.case_id == 6)
        d.phase_sign = -1;
    d.xi1 = std::complex<double>(c.xi1.real().value(), c.xi1.imag().value());
    d.xi2 = std::complex<double>(c.xi2.real().value(), c.xi2.imag().value());
    return d;
}

struct ComplexJet {
    std::complex<double> value{0.0, 0.0};
    std::complex<double> derivative{0.0, 0.0};
};

// Regrouped evaluation, finite everywhere. Returns the state and its x
// derivative so Wronskian checks need no finite differences.
inline ComplexJet assemble_jet(const EigenfunctionDescriptor& d, const Modulus& mod, double x) {
    using C = std::complex<double>;
    const double xe = x + d.x_shift;
    const JacobiTriple t = jacobi(xe, mod);
    const double k2 = mod.k_sq();
    const int n = d.n;

    C u, v, du, dv;
    if (d.case_id <= 6) {
        u = C(t.sn, 0.0) - d.xi1 * t.cn;
        v = C(t.sn, 0.0) - d.xi2 * t.cn;
        du = (C(t.cn, 0.0) + d.xi1 * t.sn) * t.dn;
        dv = (C(t.cn, 0.0) + d.xi2 * t.sn) * t.dn;
    } else if (d.case_id == 7) {
        u = C(t.sn - 1.0, 0.0);
        v = C(t.sn + 1.0, 0.0);
        du = dv = C(t.cn * t.dn, 0.0);
    } else {
        u = C(-t.cn - 1.0, 0.0);
        v = C(1.0 - t.cn, 0.0);
        du = dv = C(t.sn * t.dn, 0.0);
    }

    std::vector<C> up(static_cast<std::size_t>(n) + 1), vp(static_cast<std::size_t>(n) + 1);
    up[0] = vp[0] = C(1.0, 0.0);
    for (int j = 1; j <= n; ++j) {
        up[static_cast<std::size_t>(j)] = up[static_cast<std::size_t>(j) - 1] * u;
        vp[static_cast<std::size_t>(j)] = vp[static_cast<std::size_t>(j) - 1] * v;
    }
    C s{0.0, 0.0}, ds{0.0, 0.0};
    for (int j = 0; j <= n; ++j) {
        const double cj = d.series[static_cast<std::size_t>(j)];
        if (cj == 0.0) continue;
        s += cj * up[static_cast<std::size_t>(j)] * vp[static_cast<std::size_t>(n - j)];
        C term{0.0, 0.0};
        if (j > 0)
            term += static_cast<double>(j) * up[static_cast<std::size_t>(j - 1)] *
                    vp[static_cast<std::size_t>(n - j)] * du;
        if (j < n)
            term += static_cast<double>(n - j) * up[static_cast<std::size_t>(j)] *
                    vp[static_cast<std::size_t>(n - j - 1)] * dv;
        ds += cj * term;
    }

    const double dm = to_double(d.m);
    const double dl = to_double(d.l);
    const double sncn = t.sn * t.cn;
    C w, dw;
    switch (d.case_id) {
        case 1:
        case 2: {
            const double a = d.case_id == 1 ? -dl : dl + 1.0;
            const double wr = std::pow(t.dn, a);
            w = C(wr, 0.0);
            dw = C(wr * a * (-k2 * sncn / t.dn), 0.0);
            break;
        }
        case 3:
        case 4: {
            const double cpow = dl + 0.5;
            const double phi = dn_phase(xe, mod);
            w = std::sqrt(t.dn) * std::exp(C(0.0, d.phase_sign * cpow * phi));
            dw = w * C(-k2 * sncn / (2.0 * t.dn), d.phase_sign * cpow * mod.kp() / t.dn);
            break;
        }
        case 5:
        case 6: {
            const double cpow = dm + 0.5;
            const double th = jacobi_am(xe, mod);
            w = std::pow(t.dn, -dl) * std::exp(C(0.0, d.phase_sign * cpow * th));
            dw = w * C(dl * k2 * sncn / t.dn, d.phase_sign * cpow * t.dn);
            break;
        }
        case 7: {
            w = C(t.cn * t.cn * std::pow(t.dn, -(n + 2.0)), 0.0);
            dw = C(-2.0 * sncn * std::pow(t.dn, -(n + 1.0)) +
                       (n + 2.0) * k2 * t.sn * t.cn * t.cn * t.cn * std::pow(t.dn, -(n + 3.0)),
                   0.0);
            break;
        }
        default: {
            w = C(t.sn * t.sn * std::pow(t.dn, -(n + 2.0)), 0.0);
            dw = C(2.0 * sncn * std::pow(t.dn, -(n + 1.0)) +
                       (n + 2.0) * k2 * t.sn * t.sn * t.sn * t.cn * std::pow(t.dn, -(n + 3.0)),
                   0.0);
            break;
        }
    }

    ComplexJet out;
    out.value = w * s;
    out.derivative = dw * s + w * ds;
    return out;
}

inline std::complex<double> assemble(const EigenfunctionDescriptor& d, const Modulus& mod, double x) {
    return assemble_jet(d, mod, x).value;
}

namespace detail {

inline long long int_exponent(const Rational& r, const char* what) {
    if (!is_integer(r)) throw Error(std::string(what) + ": exponent is not an integer");
    return integer_value(r).convert_to<long long>();
}

inline double ipow(double b, long long e) {
    if (e < 0) return 1.0 / ipow(b, -e);
    double r = 1.0;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Literal gauge factor of one case, published powers and all. The cn
// exponent must come out an integer; a fractional one means the labels
// do not lie on the algebraic line of the requested case.
inline std::complex<double> gauge_factor(int case_id, const Rational& m, const Rational& l, int n,
                                         double x, const Modulus& mod) {
    using C = std::complex<double>;
    const JacobiTriple t = jacobi(x, mod);
    const double dl = to_double(l);
    const double dm = to_double(m);
    switch (case_id) {
        case 1:
            return C(detail::ipow(t.cn, detail::int_exponent(m + l, "gauge_factor")) *
                         std::pow(t.dn, -dl),
                     0.0);
        case 2:
            return C(detail::ipow(t.cn, detail::int_exponent(m - l - 1, "gauge_factor")) *
                         std::pow(t.dn, dl + 1.0),
                     0.0);
        case 3:
        case 4: {
            const double sgn = case_id == 3 ? 1.0 : -1.0;
            const double cpow = dl + 0.5;
            return detail::ipow(t.cn, detail::int_exponent(m - Rational(1, 2), "gauge_factor")) *
                   std::pow(t.dn, -dl) * std::pow(t.dn, cpow) *
                   std::exp(C(0.0, sgn * cpow * dn_phase(x, mod)));
        }
        case 5:
        case 6: {
            const double sgn = case_id == 5 ? 1.0 : -1.0;
            const double cpow = dm + 0.5;
            return detail::ipow(t.cn, detail::int_exponent(l - Rational(1, 2), "gauge_factor")) *
                   std::pow(t.dn, -dl) * std::exp(C(0.0, sgn * cpow * jacobi_am(x, mod)));
        }
        case 7:
            return C(t.cn * t.cn * std::pow(t.dn, -(n + 2.0)), 0.0);
        case 8:
            return C(t.sn * t.sn * std::pow(t.dn, -(n + 2.0)), 0.0);
        default:
            throw Error("gauge_factor: case id out of range");
    }
}

// Literal assembly in the mapped coordinate. Only used to cross-check the
// regrouped form; it genuinely divides by cn and is undefined at the pole.
inline std::complex<double> assemble_literal(const EigenfunctionDescriptor& d, const Modulus& mod,
                                             double x) {
    using C = std::complex<double>;
    const double xe = x + d.x_shift;
    const JacobiTriple t = jacobi(xe, mod);
    C xi;
    if (d.case_id <= 6) {
        if (t.cn == 0.0)
            throw SingularPoint("assemble_literal: evaluation point sits on the coordinate pole");
        xi = C(t.sn / t.cn, 0.0);
    } else if (d.case_id == 7) {
        xi = C(t.sn, 0.0);
    } else {
        xi = C(-t.cn, 0.0);
    }
    const C y1 = xi - d.xi1;
    const C y2 = xi - d.xi2;
    const int n = d.n;
    std::vector<C> p1(static_cast<std::size_t>(n) + 1), p2(static_cast<std::size_t>(n) + 1);
    p1[0] = p2[0] = C(1.0, 0.0);
    for (int j = 1; j <= n; ++j) {
        p1[static_cast<std::size_t>(j)] = p1[static_cast<std::size_t>(j) - 1] * y1;
        p2[static_cast<std::size_t>(j)] = p2[static_cast<std::size_t>(j) - 1] * y2;
    }
    C s{0.0, 0.0};
    for (int j = 0; j <= n; ++j)
        s += d.series[static_cast<std::size_t>(j)] * p1[static_cast<std::size_t>(j)] *
             p2[static_cast<std::size_t>(n - j)];
    return gauge_factor(d.case_id, d.m, d.l, d.n, xe, mod) * s;
}

// Compares the regrouped and literal assemblies on a fixed probe set that
// straddles the coordinate poles. Disagreement means the absorbed gauge W
// or a phase branch is wrong for this descriptor.
inline void verify_pole_cancellation(const EigenfunctionDescriptor& d, const Modulus& mod,
                                     double rel_tol = 1e-6) {
    static const double probes[] = {0.015, 0.40, 0.99, 1.01, 1.60, 1.99,
                                    2.01,  2.60, 2.985, 3.015, 3.30, 3.985};
    const double K = mod.K();
    double scale = 0.0;
    double worst = 0.0;
    for (const double p : probes) {
        const double x = p * K;
        const std::complex<double> reg = assemble(d, mod, x);
        const std::complex<double> lit = assemble_literal(d, mod, x);
        scale = std::max(scale, std::abs(reg));
        worst = std::max(worst, std::abs(lit - reg));
    }
    if (!(scale > 0.0))
        throw Error("verify_pole_cancellation: assembled state vanishes at every probe");
    if (worst > rel_tol * scale)
        throw NumericalPole("verify_pole_cancellation: regrouped and literal assemblies disagree");
}

// One real band-edge state: a fixed complex weight applied to the raw
// assembly, normalized so the largest sampled magnitude is one.
class RealEigenfunction {
public:
    RealEigenfunction(EigenfunctionDescriptor desc, Modulus mod, std::complex<double> weight)
        : desc_(std::move(desc)), mod_(std::move(mod)), weight_(weight) {}

    double operator()(double x) const { return (weight_ * assemble(desc_, mod_, x)).real(); }
    double value(double x) const { return (*this)(x); }

    std::pair<double, double> value_and_derivative(double x) const {
        const ComplexJet j = assemble_jet(desc_, mod_, x);
        return {(weight_ * j.value).real(), (weight_ * j.derivative).real()};
    }

    const EigenfunctionDescriptor& descriptor() const { return desc_; }
    const Modulus& modulus() const { return mod_; }
    std::complex<double> weight() const { return weight_; }

private:
    EigenfunctionDescriptor desc_;
    Modulus mod_;
    std::complex<double> weight_{1.0, 0.0};
};

// Shortest translation period the realization grids have to cover. The
// half-odd gauges repeat only after a full circuit of the phase.
inline double realization_period(const EigenfunctionDescriptor& d, const Modulus& mod) {
    const bool half_odd = d.case_id >= 3 && d.case_id <= 6;
    return (half_odd ? 4.0 : 2.0) * mod.K();
}

namespace detail {

constexpr int realization_grid = 2048;

} // namespace detail

// Realizes a nondegenerate level. The raw assembly of an integer-gauge
// case is a real function times a constant phase, so one anchor point
// fixes the rotation; the residual imaginary part has to vanish. The
// tolerance allows for the conditioning of nearly degenerate roots near
// the top of a tower, where a root known to finite precision leaks a
// small multiple of the partner state into the assembly. A genuine
// complex doublet fails this gate by eight orders of magnitude.
inline RealEigenfunction realize_single(const EigenfunctionDescriptor& d, const Modulus& mod,
                                        double imag_tol = 1e-8) {
    verify_pole_cancellation(d, mod);
    const double period = realization_period(d, mod);
    const int nn = detail::realization_grid;
    std::vector<std::complex<double>> vals(static_cast<std::size_t>(nn));
    double peak = 0.0;
    int anchor = 0;
    for (int i = 0; i < nn; ++i) {
        vals[static_cast<std::size_t>(i)] = assemble(d, mod, period * i / nn);
        const double a = std::abs(vals[static_cast<std::size_t>(i)]);
        if (a > peak) {
            peak = a;
            anchor = i;
        }
    }
    if (!(peak > 0.0)) throw Error("realize_single: assembled state is identically zero");
    const std::complex<double> w = std::conj(vals[static_cast<std::size_t>(anchor)]) / (peak * peak);
    double imag_worst = 0.0;
    for (const auto& vv : vals) imag_worst = std::max(imag_worst, std::abs((w * vv).imag()));
    if (imag_worst > imag_tol)
        throw NonRealAssembly("realize_single: state is not a phase rotation of a real function");
    return RealEigenfunction(d, mod, w);
}

// Splits a complex doublet into its real and imaginary parts. The two are
// genuine partners only when their Wronskian, which is constant in x for
// solutions at one energy, stays away from zero. The Wronskian is measured
// in units of the squared doublet magnitude per quarter period, so that a
// component consisting of rounding dust, or of the leakage of a root known
// only to finite precision, reads as dependent rather than as a real state.
inline std::pair<RealEigenfunction, RealEigenfunction> split_degenerate(
    const EigenfunctionDescriptor& d, const Modulus& mod, double dependence_tol = 1e-8) {
    verify_pole_cancellation(d, mod);
    const double period = realization_period(d, mod);
    const int nn = detail::realization_grid;
    double mf = 0.0, mg = 0.0, mabs = 0.0;
    double anchor_f = 0.0, anchor_g = 0.0;
    double wr_max = 0.0;
    for (int i = 0; i < nn; ++i) {
        const double x = period * i / nn;
        std::complex<double> vv;
        if (i % 64 == 0) {
            const ComplexJet j = assemble_jet(d, mod, x);
            wr_max = std::max(wr_max, std::abs((std::conj(j.value) * j.derivative).imag()));
            vv = j.value;
        } else {
            vv = assemble(d, mod, x);
        }
        mabs = std::max(mabs, std::abs(vv));
        if (std::abs(vv.real()) > mf) {
            mf = std::abs(vv.real());
            anchor_f = vv.real();
        }
        if (std::abs(vv.imag()) > mg) {
            mg = std::abs(vv.imag());
            anchor_g = vv.imag();
        }
    }
    if (!(mabs > 0.0)) throw Error("split_degenerate: assembled state is identically zero");
    const bool dust = mf <= 1e-12 * mabs || mg <= 1e-12 * mabs;
    if (dust || wr_max * mod.K() <= dependence_tol * mabs * mabs)
        throw DependentPair("split_degenerate: real and imaginary parts are proportional");
    const std::complex<double> wf(1.0 / anchor_f, 0.0);
    const std::complex<double> wg(0.0, -1.0 / anchor_g);
    return {RealEigenfunction(d, mod, wf), RealEigenfunction(d, mod, wg)};
}

// States of one level of a solved spectrum, indexed back into it.
struct BandStateSet {
    std::size_t energy_index = 0;
    std::vector<RealEigenfunction> states;
};

// Realizes every level of a solved spectrum. Doubly labeled levels are
// split; when the split collapses the degeneracy label is demoted in
// place and a warning is recorded. The collapse is not an error: the
// head of the longer half-odd chain produces exactly one state whenever
// its level is absent from the partner chain.
inline std::vector<BandStateSet> realize_band_states(const PotentialSpec& spec,
                                                     BandEdgeSpectrum& spectrum) {
    const Modulus& mod = spec.modulus;
    CanonicalLabels labels;
    double shift = 0.0;
    if (spec.family == Family::AssociatedLame) {
        labels = spectrum.classification ? spectrum.classification->labels
                                         : canonicalize(spec.m, spec.l);
        if (labels.swapped) shift = mod.K();
    }

    std::map<int, AlgebraizationCase> built;
    const auto case_for = [&](int id) -> const AlgebraizationCase& {
        auto it = built.find(id);
        if (it == built.end()) {
            AlgebraizationCase c = spec.family == Family::AssociatedLame
                                       ? associated_lame_case(id, labels.m, labels.l, mod)
                                       : (spec.family == Family::Tan ? tan_family_case(spec.n, mod)
                                                                     : cot_family_case(spec.n, mod));
            it = built.emplace(id, std::move(c)).first;
        }
        return it->second;
    };

    std::vector<BandStateSet> out;
    out.reserve(spectrum.energies.size());
    for (std::size_t i = 0; i < spectrum.energies.size(); ++i) {
        BandEdgeSolution& level = spectrum.energies[i];
        if (level.source_cases.empty())
            throw Error("realize_band_states: level carries no source case");
        const AlgebraizationCase& c = case_for(level.source_cases.front());
        EigenfunctionDescriptor desc = make_descriptor(c, level.value, shift);
        BandStateSet set;
        set.energy_index = i;
        if (level.degeneracy == 2) {
            try {
                auto pair = split_degenerate(desc, mod);
                set.states.push_back(std::move(pair.first));
                set.states.push_back(std::move(pair.second));
            } catch (const DependentPair&) {
                level.degeneracy = 1;
                char buf[96];
                std::snprintf(buf, sizeof buf, "level %.12g demoted to a single state", level.value);
                spectrum.warnings.emplace_back(buf);
                set.states.push_back(realize_single(desc, mod));
            }
        } else {
            set.states.push_back(realize_single(desc, mod));
        }
        out.push_back(std::move(set));
    }
    return out;
}

} // namespace qes

#endif // QES_EIGENFUNCTIONS_HPP
