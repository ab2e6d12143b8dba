// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Potential families, their parameter classification, and two independent
// evaluation paths. The closed-form path evaluates the potentials
// directly:
//
//   V(x) = k^2 m(m+1) sn^2 x + k^2 l(l+1) cn^2 x / dn^2 x   (two-parameter)
//   V(x) = kp^2 [2/cn^2 x - (n+3)(n+2)/dn^2 x]              (tan family)
//   V(x) = 2/sn^2 x - kp^2 (n+3)(n+2)/dn^2 x                (cot family)
//
// The generic path rebuilds V from the algebraic data of a case: the
// quartic B4, the linear polynomial A2 and the constant d determine
//
//   V = (B4' - 2 B3)(3 B4' - 2 B3)/(16 B4) - (B4'' - 2 B3' + 4 B2)/4
//
// evaluated along the elliptic coordinate xi(x) of the quartic's table
// row, where B3 = (1-n)/2 B4' + A2 and B2 = n(n-1)/12 B4'' - n/2 A2'
// + n(n+2)/12 C_00 + d. The two paths share no formulas, which makes
// their agreement a meaningful test of the whole case catalog.

#ifndef QES_POTENTIALS_HPP
#define QES_POTENTIALS_HPP

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "qes/cases.hpp"
#include "qes/elliptic.hpp"
#include "qes/errors.hpp"
#include "qes/rational.hpp"

namespace qes {

// One row of the coordinate-transformation catalog: a quartic together
// with the elliptic function xi(x) solving (dxi/dx)^2 = B4(xi) and the
// closed form of B4 along that solution.
struct QuarticRow {
    int index = 0;                  // 1..12
    std::array<Rational, 5> b4;     // ascending coefficients of B4
    double (*xi)(const JacobiTriple&) = nullptr;
    double (*b4_closed)(const JacobiTriple&, double k2, double kp2) = nullptr;
};

inline QuarticRow quartic_row(int index, const Modulus& mod) {
    const Rational k2 = mod.exact_k_sq();
    const Rational kp2 = mod.exact_kp_sq();
    const Rational one(1);
    QuarticRow r;
    r.index = index;
    switch (index) {
        case 1: // (1 + z^2)(1 + kp^2 z^2)
            r.b4 = {one, Rational(0), 2 - k2, Rational(0), kp2};
            r.xi = [](const JacobiTriple& t) { return t.sn / t.cn; };
            r.b4_closed = [](const JacobiTriple& t, double, double) {
                return t.dn * t.dn / (t.cn * t.cn * t.cn * t.cn);
            };
            break;
        case 2: // (1 - z^2)(1 - k^2 z^2)
            r.b4 = {one, Rational(0), -(1 + k2), Rational(0), k2};
            r.xi = [](const JacobiTriple& t) { return t.sn; };
            r.b4_closed = [](const JacobiTriple& t, double, double) {
                return t.cn * t.cn * t.dn * t.dn;
            };
            break;
        case 3: // (1 - z^2)(kp^2 + k^2 z^2)
            r.b4 = {kp2, Rational(0), 2 * k2 - 1, Rational(0), -k2};
            r.xi = [](const JacobiTriple& t) { return -t.cn; };
            r.b4_closed = [](const JacobiTriple& t, double, double) {
                return t.sn * t.sn * t.dn * t.dn;
            };
            break;
        case 4: // (1 - z^2)(z^2 - kp^2)
            r.b4 = {-kp2, Rational(0), 2 - k2, Rational(0), Rational(-1)};
            r.xi = [](const JacobiTriple& t) { return -t.dn; };
            r.b4_closed = [](const JacobiTriple& t, double k2v, double) {
                return k2v * k2v * t.sn * t.sn * t.cn * t.cn;
            };
            break;
        case 5: // (1 + k^2 z^2)(1 - kp^2 z^2)
            r.b4 = {one, Rational(0), 2 * k2 - 1, Rational(0), -k2 * kp2};
            r.xi = [](const JacobiTriple& t) { return t.sn / t.dn; };
            r.b4_closed = [](const JacobiTriple& t, double, double) {
                return t.cn * t.cn / (t.dn * t.dn * t.dn * t.dn);
            };
            break;
        case 6: // (z^2 - 1)(z^2 - k^2)
            r.b4 = {k2, Rational(0), -(1 + k2), Rational(0), one};
            r.xi = [](const JacobiTriple& t) { return -1.0 / t.sn; };
            r.b4_closed = [](const JacobiTriple& t, double, double) {
                const double s2 = t.sn * t.sn;
                return t.cn * t.cn * t.dn * t.dn / (s2 * s2);
            };
            break;
        case 7: // (z^2 - 1)(kp^2 z^2 + k^2)
            r.b4 = {-k2, Rational(0), 2 * k2 - 1, Rational(0), kp2};
            r.xi = [](const JacobiTriple& t) { return 1.0 / t.cn; };
            r.b4_closed = [](const JacobiTriple& t, double, double) {
                const double c2 = t.cn * t.cn;
                return t.sn * t.sn * t.dn * t.dn / (c2 * c2);
            };
            break;
        case 8: // (z^2 - 1)(1 - kp^2 z^2)
            r.b4 = {Rational(-1), Rational(0), 2 - k2, Rational(0), -kp2};
            r.xi = [](const JacobiTriple& t) { return 1.0 / t.dn; };
            r.b4_closed = [](const JacobiTriple& t, double k2v, double) {
                const double d2 = t.dn * t.dn;
                return k2v * k2v * t.sn * t.sn * t.cn * t.cn / (d2 * d2);
            };
            break;
        case 9: // (1 + z^2)(kp^2 + z^2)
            r.b4 = {kp2, Rational(0), 2 - k2, Rational(0), one};
            r.xi = [](const JacobiTriple& t) { return -t.cn / t.sn; };
            r.b4_closed = [](const JacobiTriple& t, double, double) {
                const double s2 = t.sn * t.sn;
                return t.dn * t.dn / (s2 * s2);
            };
            break;
        case 10: // (z^2 + k^2)(z^2 - kp^2)
            r.b4 = {-k2 * kp2, Rational(0), 2 * k2 - 1, Rational(0), one};
            r.xi = [](const JacobiTriple& t) { return -t.dn / t.sn; };
            r.b4_closed = [](const JacobiTriple& t, double, double) {
                const double s2 = t.sn * t.sn;
                return t.cn * t.cn / (s2 * s2);
            };
            break;
        case 11: // (1 - z^2)(1 - k^2 z^2) along -cn/dn
            r.b4 = {one, Rational(0), -(1 + k2), Rational(0), k2};
            r.xi = [](const JacobiTriple& t) { return -t.cn / t.dn; };
            r.b4_closed = [](const JacobiTriple& t, double, double kp2v) {
                const double d2 = t.dn * t.dn;
                return kp2v * kp2v * t.sn * t.sn / (d2 * d2);
            };
            break;
        case 12: // (z^2 - 1)(z^2 - k^2) along dn/cn
            r.b4 = {k2, Rational(0), -(1 + k2), Rational(0), one};
            r.xi = [](const JacobiTriple& t) { return t.dn / t.cn; };
            r.b4_closed = [](const JacobiTriple& t, double, double kp2v) {
                const double c2 = t.cn * t.cn;
                return kp2v * kp2v * t.sn * t.sn / (c2 * c2);
            };
            break;
        default:
            throw Error("quartic_row: index must lie in 1..12");
    }
    return r;
}

enum class Family { AssociatedLame, Tan, Cot };

struct PotentialSpec {
    Family family;
    Rational m, l; // spin labels (two-parameter family)
    int n;         // degree (tan and cot families)
    Modulus modulus;
};

inline PotentialSpec associated_lame_spec(Rational m, Rational l, Modulus mod) {
    return {Family::AssociatedLame, std::move(m), std::move(l), 0, std::move(mod)};
}
inline PotentialSpec tan_spec(int n, Modulus mod) {
    if (n < 0) throw RestrictionViolated("tan family: degree must be a non-negative integer");
    return {Family::Tan, Rational(0), Rational(0), n, std::move(mod)};
}
inline PotentialSpec cot_spec(int n, Modulus mod) {
    if (n < 0) throw RestrictionViolated("cot family: degree must be a non-negative integer");
    return {Family::Cot, Rational(0), Rational(0), n, std::move(mod)};
}

// Spin labels modulo the symmetries of the two-parameter potential:
// m -> -m-1 and l -> -l-1 leave it unchanged, and swapping m with l
// shifts it by the half period K. The canonical representative has
// m >= l >= -1/2.
struct CanonicalLabels {
    Rational m, l;
    bool swapped = false; // true when the potential matches the input at x + K
};

inline CanonicalLabels canonicalize(Rational m, Rational l) {
    if (m < Rational(-1, 2)) m = -m - 1;
    if (l < Rational(-1, 2)) l = -l - 1;
    CanonicalLabels out;
    out.swapped = m < l;
    if (out.swapped) std::swap(m, l);
    out.m = std::move(m);
    out.l = std::move(l);
    return out;
}

// A line in the (m, l) plane along which the equation algebraizes. The
// oblique lines belong to single cases; the axis-parallel lines at
// half-odd m or l are realized by a pair of cases whose states combine
// into degenerate doublets.
struct AlgebraicLine {
    std::vector<int> case_ids;
    int n = 0; // polynomial degree along the line; n+1 states per case
};

struct ALClassification {
    CanonicalLabels labels;
    std::vector<AlgebraicLine> lines;

    bool critical() const { return lines.empty(); }
    std::vector<int> degrees() const {
        std::vector<int> d;
        d.reserve(lines.size());
        for (const auto& ln : lines) d.push_back(ln.n);
        return d;
    }
};

// Lines through a point of the effective region. The oblique lines are
// suppressed at half-odd m: there the would-be polynomial module
// collapses, and the corresponding states are carried by the axis
// parallel cases instead.
inline ALClassification classify(const Rational& m_in, const Rational& l_in) {
    ALClassification out;
    out.labels = canonicalize(m_in, l_in);
    const Rational& m = out.labels.m;
    const Rational& l = out.labels.l;

    if (!is_half_odd_integer(m)) {
        if (is_nonneg_integer(m + l))
            out.lines.push_back({{1}, static_cast<int>(integer_value(m + l))});
        if (is_nonneg_integer(m - l - 1))
            out.lines.push_back({{2}, static_cast<int>(integer_value(m - l - 1))});
    }
    if (is_half_odd_integer(m) && is_nonneg_integer(m - Rational(1, 2)))
        out.lines.push_back({{3, 4}, static_cast<int>(integer_value(m - Rational(1, 2)))});
    if (is_half_odd_integer(l) && is_nonneg_integer(l - Rational(1, 2)))
        out.lines.push_back({{5, 6}, static_cast<int>(integer_value(l - Rational(1, 2)))});
    return out;
}

// Closed-form potential evaluation at a point. The tan family is
// singular at odd multiples of K, the cot family at even multiples of
// 2K; points too close to a pole are rejected.
inline double eval_potential(const PotentialSpec& spec, double x) {
    const Modulus& mod = spec.modulus;
    const JacobiTriple t = jacobi(x, mod);
    switch (spec.family) {
        case Family::AssociatedLame: {
            const double p = to_double(spec.m * (spec.m + 1));
            const double q = to_double(spec.l * (spec.l + 1));
            const double cd = t.cn / t.dn;
            return mod.k_sq() * (p * t.sn * t.sn + q * cd * cd);
        }
        case Family::Tan: {
            if (std::abs(t.cn) < 1e-8)
                throw SingularPoint("tan family potential: pole at odd multiples of K");
            const double a = static_cast<double>(spec.n + 3) * (spec.n + 2);
            return mod.kp_sq() * (2.0 / (t.cn * t.cn) - a / (t.dn * t.dn));
        }
        case Family::Cot: {
            if (std::abs(t.sn) < 1e-8)
                throw SingularPoint("cot family potential: pole at even multiples of 2K");
            const double a = static_cast<double>(spec.n + 3) * (spec.n + 2);
            return 2.0 / (t.sn * t.sn) - mod.kp_sq() * a / (t.dn * t.dn);
        }
    }
    throw Error("eval_potential: unknown family");
}

// The quartic row along which a case's coordinate runs.
inline int case_row_index(int case_id) {
    if (case_id >= 1 && case_id <= 6) return 1;
    if (case_id == 7) return 2;
    if (case_id == 8) return 3;
    throw Error("case_row_index: case id out of range");
}

// Generic potential evaluation from the raw algebraic data of a case.
// All arithmetic runs over the complex numbers because the linear
// coefficients may be imaginary; the result must come out real, and a
// residual imaginary part flags corrupted case data.
inline double eval_generic(const AlgebraizationCase& c, double x) {
    using C = std::complex<double>;
    const Modulus mod(c.k2);
    const QuarticRow row = quartic_row(case_row_index(c.case_id), mod);
    const JacobiTriple t = jacobi(x, mod);
    const double xi = row.xi(t);

    double b4c[5];
    for (int i = 0; i < 5; ++i) b4c[i] = to_double(row.b4[i]);
    const double b4 = ((b4c[4] * xi + b4c[3]) * xi + b4c[2]) * xi * xi + b4c[1] * xi + b4c[0];
    const double b4p = (4 * b4c[4] * xi + 3 * b4c[3]) * xi * xi + 2 * b4c[2] * xi + b4c[1];
    const double b4pp = 12 * b4c[4] * xi * xi + 6 * b4c[3] * xi + 2 * b4c[2];
    if (std::abs(b4) < 1e-12)
        throw SingularPoint("eval_generic: coordinate frame degenerates at a potential pole");

    const C cp(c.c_plus.real().value(), c.c_plus.imag().value());
    const C cz(c.c_zero.real().value(), c.c_zero.imag().value());
    const C cm(c.c_minus.real().value(), c.c_minus.imag().value());
    const double n = c.n;
    const C a2 = (cp * xi + cz) * xi + cm;
    const C a2p = 2.0 * cp * xi + cz;

    const C b3 = 0.5 * (1.0 - n) * b4p + a2;
    const C b3p = 0.5 * (1.0 - n) * b4pp + a2p;
    const C b2 = n * (n - 1.0) / 12.0 * b4pp - 0.5 * n * a2p +
                 C(n * (n + 2.0) / 12.0 * to_double(c.c_00) + to_double(c.d));

    const C v = (b4p - 2.0 * b3) * (3.0 * b4p - 2.0 * b3) / (16.0 * b4) - 0.25 * (b4pp - 2.0 * b3p + 4.0 * b2);
    const double scale = std::max(1.0, std::abs(v.real()));
    if (std::abs(v.imag()) > 1e-9 * scale)
        throw Error("eval_generic: potential has a residual imaginary part");
    return v.real();
}

// Coefficients of the first row's potential family
//   V = P sn^2 + Q sn cn + R sn cn / dn^2 + S cn^2 / dn^2
// from the raw linear data of a case, computed exactly. The two
// parameter potential corresponds to Q = R = 0 with P = k^2 m(m+1) and
// S = k^2 l(l+1).
struct SnCnForm {
    Rational p, q, r, s;
};

inline SnCnForm sn_cn_coefficients(const AlgebraizationCase& c) {
    if (c.case_id < 1 || c.case_id > 6)
        throw Error("sn_cn_coefficients: the sn cn form belongs to the first quartic row");
    const QuadExtC k2{QuadExt(c.k2)};
    const QuadExtC kp2{QuadExt(c.kp2)};
    const QuadExtC np1{QuadExt(Rational(c.n + 1))};
    const QuadExtC nn2{QuadExt(Rational(c.n) * (c.n + 2))};
    const QuadExtC four_k2{QuadExt(4 * c.k2)};
    const QuadExtC two_k2{QuadExt(2 * c.k2)};
    const QuadExtC quarter{QuadExt(Rational(1, 4))};
    const QuadExtC half{QuadExt(Rational(1, 2))};

    const QuadExtC dpm = c.c_plus - c.c_minus;
    const QuadExtC dpkm = c.c_plus - kp2 * c.c_minus;
    const QuadExtC c0 = c.c_zero;

    const QuadExtC pv = quarter * k2 * nn2 - half * c0 * np1 + (c0 * c0 - dpm * dpm) / four_k2;
    const QuadExtC qv = dpm * (k2 * np1 - c0) / two_k2;
    const QuadExtC rv = dpkm * (k2 * np1 + c0) / two_k2;
    const QuadExtC sv = quarter * k2 * nn2 + half * c0 * np1 + (c0 * c0 - dpkm * dpkm / kp2) / four_k2;

    SnCnForm out;
    out.p = detail::real_rational(pv, "sn^2 coefficient");
    out.q = detail::real_rational(qv, "sn cn coefficient");
    out.r = detail::real_rational(rv, "sn cn / dn^2 coefficient");
    out.s = detail::real_rational(sv, "cn^2 / dn^2 coefficient");
    return out;
}

} // namespace qes

#endif // QES_POTENTIALS_HPP
