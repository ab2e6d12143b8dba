// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Jacobi elliptic functions sn, cn, dn of real modulus and the complete
// elliptic integral K. K comes from the arithmetic-geometric mean; the
// triple comes from the descending Landen transformation (Abramowitz &
// Stegun 17.6), with arguments reduced to [0, K] first so the backward
// recursion stays well conditioned at any |x|.

#ifndef QES_ELLIPTIC_HPP
#define QES_ELLIPTIC_HPP

#include <algorithm>
#include <cmath>
#include <optional>

#include "qes/errors.hpp"
#include "qes/rational.hpp"

namespace qes {

// Elliptic modulus, always handled through its square k^2 in (0,1).
// When built from a rational the exact value is kept for the algebraic
// pipeline; the limits k^2 in {0,1} are excluded (limit potentials are
// compared analytically by the oracle instead).
class Modulus {
  public:
    explicit Modulus(double k_sq) { init(k_sq, std::nullopt); }
    explicit Modulus(const Rational& k_sq) { init(to_double(k_sq), k_sq); }

    double k_sq() const { return k_sq_; }
    double kp_sq() const { return kp_sq_; }
    double k() const { return k_; }
    double kp() const { return kp_; }
    double K() const { return K_; }

    bool has_exact() const { return exact_.has_value(); }
    // Exact value of k^2. Doubles are dyadic rationals, so a modulus built
    // from a double still has an exact representative; has_exact() records
    // whether the caller supplied a true rational.
    Rational exact_k_sq() const { return exact_ ? *exact_ : rational_from_double(k_sq_); }
    Rational exact_kp_sq() const { return Rational(1) - exact_k_sq(); }

  private:
    void init(double k_sq, std::optional<Rational> exact) {
        if (!(k_sq > 0.0) || !(k_sq < 1.0))
            throw Error("Modulus: k^2 must lie strictly inside (0,1)");
        k_sq_ = k_sq;
        kp_sq_ = 1.0 - k_sq;
        k_ = std::sqrt(k_sq_);
        kp_ = std::sqrt(kp_sq_);
        exact_ = std::move(exact);
        K_ = agm_K(kp_);
    }
    static double agm_K(double kp) {
        double a = 1.0, b = kp;
        for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
            const double an = 0.5 * (a + b);
            b = std::sqrt(a * b);
            a = an;
        }
        return 1.5707963267948966 / a; // pi / (2 agm(1, k'))
    }

    double k_sq_ = 0, kp_sq_ = 0, k_ = 0, kp_ = 0, K_ = 0;
    std::optional<Rational> exact_;
};

struct JacobiTriple {
    double sn, cn, dn;
};

inline double complete_K(const Modulus& m) { return m.K(); }

namespace detail {

// Landen/AGM evaluation of (sn, cn, dn) for u in [0, K]; sn, cn >= 0 there.
inline JacobiTriple jacobi_reduced(double u, const Modulus& m) {
    double a[64], c[64];
    a[0] = 1.0;
    c[0] = m.k();
    double b = m.kp();
    int n = 0;
    while (c[n] > 1e-16 && n < 62) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    for (int i = n; i >= 1; --i) {
        const double s = std::clamp(c[i] * std::sin(phi) / a[i], -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(s));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    // dn via k'^2 + k^2 cn^2 = 1 - k^2 sn^2: no cancellation as k^2 -> 1.
    const double dn = std::sqrt(m.kp_sq() + m.k_sq() * cn * cn);
    return {sn, cn, dn};
}

} // namespace detail

inline JacobiTriple jacobi(double x, const Modulus& m) {
    const double K = m.K();
    double r = std::fmod(x, 4.0 * K);
    if (r < 0) r += 4.0 * K;
    double sn_sign = 1.0, cn_sign = 1.0;
    if (r >= 2.0 * K) { // sn(x+2K) = -sn, cn(x+2K) = -cn, dn unchanged
        r -= 2.0 * K;
        sn_sign = -sn_sign;
        cn_sign = -cn_sign;
    }
    if (r > K) { // sn(2K-x) = sn, cn(2K-x) = -cn, dn unchanged
        r = 2.0 * K - r;
        cn_sign = -cn_sign;
    }
    const JacobiTriple t = detail::jacobi_reduced(r, m);
    return {sn_sign * t.sn, cn_sign * t.cn, t.dn};
}

// Continuous amplitude am(x) = arg(cn + i sn), unwound so that
// am(x + 2K) = am(x) + pi; d(am)/dx = dn > 0.
inline double jacobi_am(double x, const Modulus& m) {
    const double twoK = 2.0 * m.K();
    const double p = std::floor(x / twoK);
    const double r = x - twoK * p; // in [0, 2K): sn >= 0 so atan2 in [0, pi]
    const JacobiTriple t = jacobi(r, m);
    return 3.141592653589793 * p + std::atan2(t.sn, t.cn);
}

// Continuous phase of cn + i k' sn, unwound the same way; its modulus is
// exactly dn and d(phase)/dx = k'/dn > 0.
inline double dn_phase(double x, const Modulus& m) {
    const double twoK = 2.0 * m.K();
    const double p = std::floor(x / twoK);
    const double r = x - twoK * p;
    const JacobiTriple t = jacobi(r, m);
    return 3.141592653589793 * p + std::atan2(m.kp() * t.sn, t.cn);
}

} // namespace qes

#endif // QES_ELLIPTIC_HPP
