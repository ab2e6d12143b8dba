// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// The algebraization cases. Each case packages the data of a gauged
// Hamiltonian that is quadratic in the sl(2,R) generators acting on
// polynomials of degree at most n:
//
//   H_G = -sum C_ab T^a T^b - sum C_a T^a - d
//
// together with the quartic B4(z) = C_pp z^4 + 2 C_p0 z^3 + C_00 z^2
// + 2 C_0m z + C_mm built from the quadratic coefficients. Cases 1..6
// cover the two-parameter elliptic potential with spin labels (m, l);
// their quadratic data is shared and only the linear coefficients (which
// may be imaginary and may carry a factor of the complementary modulus
// kp) distinguish them. Cases 7 and 8 are one-parameter families indexed
// directly by n.
//
// A Mobius change of variable y -> (e y + f)/(g y + h) sending 0 and
// infinity to two roots xi1, xi2 of B4 turns the quartic into one with
// vanishing leading and trailing coefficients. In that frame the
// eigenvalue problem becomes a three-term recursion; the transformed
// (hatted) coefficients are always real and rational even when the raw
// linear ones are not. They are computed here by exact polynomial
// arithmetic over Q(kp)[i] and checked against that expectation.

#ifndef QES_CASES_HPP
#define QES_CASES_HPP

#include <vector>

#include "qes/elliptic.hpp"
#include "qes/errors.hpp"
#include "qes/quadext.hpp"
#include "qes/rational.hpp"

namespace qes {

struct AlgebraizationCase {
    int case_id = 0; // 1..8
    int n = 0;       // polynomial degree cutoff; module dimension is n+1
    Rational m, l;   // spin labels (cases 1..6; zero otherwise)
    Rational k2, kp2;

    // raw gauged-Hamiltonian data
    QuadExtC c_plus, c_minus, c_zero;      // linear coefficients
    Rational c_pp, c_p0, c_00, c_0m, c_mm; // quadratic coefficients
    Rational d;                            // constant term
    QuadExtC xi1, xi2;                     // quartic roots used by the map

    // transformed coefficients (leading/trailing quartic entries vanish)
    Rational h_p0, h_00, h_0m; // quadratic
    Rational h_p, h_0, h_m;    // linear
    Rational d1;               // constant term in the transformed frame
};

namespace detail {

using Poly = std::vector<QuadExtC>; // ascending powers

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, QuadExtC(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

inline Poly lin_pow(const QuadExtC& c1, const QuadExtC& c0, int p) {
    Poly r{QuadExtC(1)};
    const Poly lin{c0, c1};
    for (int i = 0; i < p; ++i) r = poly_mul(r, lin);
    return r;
}

inline Rational real_rational(const QuadExtC& z, const char* what) {
    if (!z.is_real() || !z.real().is_rational())
        throw Error(std::string("case table: ") + what + " is not real rational");
    return z.real().rat();
}

// Mobius push-forward of a polynomial p(z) of fixed degree deg:
//   phat(y) = (g y + h)^deg * p((e y + f)/(g y + h))
inline Poly mobius_push(const Poly& p, int deg, const QuadExtC& e, const QuadExtC& f, const QuadExtC& g,
                        const QuadExtC& h) {
    Poly acc(static_cast<std::size_t>(deg) + 1, QuadExtC(0));
    for (int j = 0; j <= deg; ++j) {
        if (static_cast<std::size_t>(j) >= p.size() || p[j] == QuadExtC(0)) continue;
        const Poly term = poly_mul(lin_pow(e, f, j), lin_pow(g, h, deg - j));
        for (std::size_t i = 0; i < term.size(); ++i) acc[i] = acc[i] + p[j] * term[i];
    }
    return acc;
}

// Fills the transformed block of a case whose raw block is complete.
inline void transform_case(AlgebraizationCase& c) {
    const QuadExtC e = c.xi2, f = QuadExtC(0) - c.xi1, g = QuadExtC(1), h = QuadExtC(-1);
    const QuadExtC det = e * h - f * g; // = xi1 - xi2
    if (det == QuadExtC(0)) throw Error("case table: coincident quartic roots");

    const Poly b4{QuadExtC(QuadExt(c.c_mm)), QuadExtC(QuadExt(Rational(2) * c.c_0m)), QuadExtC(QuadExt(c.c_00)),
                  QuadExtC(QuadExt(Rational(2) * c.c_p0)), QuadExtC(QuadExt(c.c_pp))};
    Poly b4h = mobius_push(b4, 4, e, f, g, h);
    const QuadExtC det2 = det * det;
    for (auto& v : b4h) v = v / det2;

    if (!(b4h[4] == QuadExtC(0)) || !(b4h[0] == QuadExtC(0)))
        throw Error("case table: selected points are not quartic roots");
    c.h_p0 = real_rational(b4h[3], "transformed cubic coefficient") / 2;
    c.h_00 = real_rational(b4h[2], "transformed quadratic coefficient");
    c.h_0m = real_rational(b4h[1], "transformed linear coefficient") / 2;

    const Poly a2{c.c_minus, c.c_zero, c.c_plus};
    Poly a2h = mobius_push(a2, 2, e, f, g, h);
    for (auto& v : a2h) v = v / det;
    c.h_p = real_rational(a2h[2], "transformed generator coefficient");
    c.h_0 = real_rational(a2h[1], "transformed generator coefficient");
    c.h_m = real_rational(a2h[0], "transformed generator coefficient");

    const Rational nn(c.n);
    c.d1 = c.d + nn * (nn + 2) / 12 * (c.c_00 - c.h_00);
}

// Constant term for the shared quadratic block of cases 1..6, from the
// closed form in the raw linear coefficients. The combination is real
// and rational for every case even though the inputs need not be.
inline Rational al_constant_term(const AlgebraizationCase& c) {
    const QuadExtC kp_inv_sq{QuadExt(Rational(1) / c.kp2), QuadExt(Rational(0))};
    const QuadExtC num = c.c_minus * c.c_minus - (c.c_zero * c.c_zero + QuadExtC(2) * c.c_plus * c.c_minus) +
                         c.c_plus * c.c_plus * kp_inv_sq;
    const Rational nn(c.n);
    return real_rational(num, "constant term") / (4 * c.k2) - nn * (nn + 2) / 2;
}

inline void require_case_id(int case_id, int lo, int hi) {
    if (case_id < lo || case_id > hi) throw Error("case table: case id out of range");
}

} // namespace detail

// Cases 1..6: the two-parameter potential with spin labels (m, l).
// Throws RestrictionViolated when (m, l) does not put the requested case
// on an algebraization line: the degree n must be a non-negative integer,
// and cases 1..2 additionally require m not half-odd (their polynomial
// module collapses there and the surviving states migrate to cases 3..4).
inline AlgebraizationCase associated_lame_case(int case_id, const Rational& m, const Rational& l,
                                               const Modulus& mod) {
    detail::require_case_id(case_id, 1, 6);
    AlgebraizationCase c;
    c.case_id = case_id;
    c.m = m;
    c.l = l;
    c.k2 = mod.exact_k_sq();
    c.kp2 = mod.exact_kp_sq();

    Rational n_rat;
    switch (case_id) {
        case 1: n_rat = m + l; break;
        case 2: n_rat = m - l - 1; break;
        case 3:
        case 4: n_rat = m - Rational(1, 2); break;
        case 5:
        case 6: n_rat = l - Rational(1, 2); break;
    }
    if (!is_nonneg_integer(n_rat))
        throw RestrictionViolated("case " + std::to_string(case_id) + ": degree " + to_string(n_rat) +
                                  " is not a non-negative integer");
    if ((case_id == 1 || case_id == 2) && is_half_odd_integer(m))
        throw RestrictionViolated("case " + std::to_string(case_id) +
                                  ": half-odd m is excluded; use cases 3 or 4");
    c.n = static_cast<int>(integer_value(n_rat));

    // shared quadratic block: B4 = (1 + z^2)(1 + kp^2 z^2)
    c.c_pp = c.kp2;
    c.c_p0 = 0;
    c.c_00 = 2 - c.k2;
    c.c_0m = 0;
    c.c_mm = 1;

    const QuadExt kp(Rational(0), Rational(1), c.kp2);       // sqrt(kp^2)
    const QuadExt kp_inv(Rational(0), Rational(1) / c.kp2, c.kp2); // 1/kp
    const QuadExt zero{Rational(0)};
    const QuadExtC i_unit{zero, QuadExt(Rational(1))};

    switch (case_id) {
        case 1:
            c.c_plus = QuadExtC(0);
            c.c_minus = QuadExtC(0);
            c.c_zero = QuadExtC(QuadExt(c.k2 * (l - m)), zero);
            c.xi1 = QuadExtC(zero, QuadExt(Rational(-1)));
            c.xi2 = i_unit;
            break;
        case 2:
            c.c_plus = QuadExtC(0);
            c.c_minus = QuadExtC(0);
            c.c_zero = QuadExtC(QuadExt(-c.k2 * (l + m + 1)), zero);
            c.xi1 = QuadExtC(zero, QuadExt(Rational(-1)));
            c.xi2 = i_unit;
            break;
        case 3:
        case 4: {
            const Rational s = 2 * l + 1;
            QuadExt amp = kp * QuadExt(s); // kp (2l+1)
            if (case_id == 4) amp = zero - amp;
            c.c_plus = QuadExtC(zero, amp);
            c.c_minus = c.c_plus;
            c.c_zero = QuadExtC(QuadExt(-c.k2 * (m + Rational(1, 2))), zero);
            const QuadExtC root{zero, kp_inv}; // i/kp
            if (case_id == 3) {
                c.xi1 = root;
                c.xi2 = QuadExtC(0) - root;
            } else {
                c.xi1 = QuadExtC(0) - root;
                c.xi2 = root;
            }
            break;
        }
        case 5:
        case 6: {
            const Rational s = 2 * m + 1;
            QuadExt amp_p = QuadExt(c.kp2 * s); // kp^2 (2m+1)
            QuadExt amp_m = QuadExt(s);
            if (case_id == 6) {
                amp_p = zero - amp_p;
                amp_m = zero - amp_m;
            }
            c.c_plus = QuadExtC(zero, amp_p);
            c.c_minus = QuadExtC(zero, amp_m);
            c.c_zero = QuadExtC(QuadExt(c.k2 * (l + Rational(1, 2))), zero);
            if (case_id == 5) {
                c.xi1 = i_unit;
                c.xi2 = QuadExtC(0) - i_unit;
            } else {
                c.xi1 = QuadExtC(0) - i_unit;
                c.xi2 = i_unit;
            }
            break;
        }
    }

    c.d = detail::al_constant_term(c);
    detail::transform_case(c);
    return c;
}

// Case 7: one-parameter family on B4 = (1 - z^2)(1 - k^2 z^2), z = sn x.
inline AlgebraizationCase tan_family_case(int n, const Modulus& mod) {
    if (n < 0) throw RestrictionViolated("case 7: degree must be a non-negative integer");
    AlgebraizationCase c;
    c.case_id = 7;
    c.n = n;
    c.k2 = mod.exact_k_sq();
    c.kp2 = mod.exact_kp_sq();
    c.c_pp = c.k2;
    c.c_p0 = 0;
    c.c_00 = -(1 + c.k2);
    c.c_0m = 0;
    c.c_mm = 1;
    c.c_plus = QuadExtC(0);
    c.c_minus = QuadExtC(0);
    c.c_zero = QuadExtC(QuadExt(-c.kp2 * (n + 4)), QuadExt(Rational(0)));
    c.xi1 = QuadExtC(1);
    c.xi2 = QuadExtC(-1);
    const Rational nn(n);
    c.d = (3 * nn * nn + 12 * nn + 8 - c.k2 * (nn * nn + 8 * nn + 8)) / 4;
    detail::transform_case(c);
    return c;
}

// Case 8: one-parameter family on B4 = (1 - z^2)(kp^2 + k^2 z^2), z = -cn x.
inline AlgebraizationCase cot_family_case(int n, const Modulus& mod) {
    if (n < 0) throw RestrictionViolated("case 8: degree must be a non-negative integer");
    AlgebraizationCase c;
    c.case_id = 8;
    c.n = n;
    c.k2 = mod.exact_k_sq();
    c.kp2 = mod.exact_kp_sq();
    c.c_pp = -c.k2;
    c.c_p0 = 0;
    c.c_00 = 2 * c.k2 - 1;
    c.c_0m = 0;
    c.c_mm = c.kp2;
    c.c_plus = QuadExtC(0);
    c.c_minus = QuadExtC(0);
    c.c_zero = QuadExtC(QuadExt(Rational(-(n + 4))), QuadExt(Rational(0)));
    c.xi1 = QuadExtC(1);
    c.xi2 = QuadExtC(-1);
    const Rational nn(n);
    c.d = (3 * nn * nn + 12 * nn + 8) / 4 - c.k2 / 2 * nn * (nn + 2);
    detail::transform_case(c);
    return c;
}

} // namespace qes

#endif // QES_CASES_HPP
