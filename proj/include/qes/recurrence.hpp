// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Three-term recursion attached to a case. In the Mobius frame the
// eigenvalue equation closes on coefficients P_j(E), j = 0..n+1, with
//
//   A_j P_{j+1} = (E - lambda_j) P_j + G_j P_{j-1},   P_{-1} = 0, P_0 = 1
//   A_j = -((2j - n + 1) h_0m + h_m)
//   G_j = j (j - 1 - n) ((2j - n - 1) h_p0 + h_p)
//   lambda_j = -d1 - h_0 (j - n/2) - h_00 (j - n/2)^2
//
// The monic rescaling Q_j = omega_j P_j with omega_0 = 1 and
// omega_{j+1} = A_j omega_j turns this into
//
//   Q_{j+1} = (E - lambda_j) Q_j - rho_j Q_{j-1},  rho_j = -A_{j-1} G_j
//
// so Q_{n+1} is a monic polynomial of degree n+1 in E whose roots are
// exactly the algebraic energies of the case. All coefficients are
// rational; they are computed exactly, and every case also has closed
// forms for lambda, rho and omega against which the generic path is
// cross-checked in the tests.

#ifndef QES_RECURRENCE_HPP
#define QES_RECURRENCE_HPP

#include <utility>
#include <vector>

#include "qes/cases.hpp"
#include "qes/errors.hpp"
#include "qes/rational.hpp"

namespace qes {

struct CriticalPolynomialBundle {
    int case_id = 0;
    int n = 0;
    std::vector<Rational> lambda; // size n+1
    std::vector<Rational> rho;    // size n+2; rho[0] = rho[n+1] = 0
    std::vector<Rational> omega;  // size n+1; Q_j = omega_j P_j
    std::vector<Rational> monic;  // critical polynomial, ascending, degree n+1
};

// Monic critical polynomial from the diagonal and coupling coefficients,
// by running the recursion with polynomial-valued entries.
inline std::vector<Rational> critical_polynomial(const std::vector<Rational>& lambda,
                                                 const std::vector<Rational>& rho) {
    std::vector<Rational> prev;                // Q_{-1} = 0
    std::vector<Rational> cur{Rational(1)};    // Q_0 = 1
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        std::vector<Rational> next(cur.size() + 1, Rational(0));
        for (std::size_t t = 0; t < cur.size(); ++t) {
            next[t + 1] += cur[t];
            next[t] -= lambda[j] * cur[t];
        }
        if (j >= 1)
            for (std::size_t t = 0; t < prev.size(); ++t) next[t] -= rho[j] * prev[t];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace detail {

inline Rational coeff_a(const AlgebraizationCase& c, int j) {
    return -(Rational(2 * j - c.n + 1) * c.h_0m + c.h_m);
}

inline Rational coeff_g(const AlgebraizationCase& c, int j) {
    return Rational(j) * Rational(j - 1 - c.n) * (Rational(2 * j - c.n - 1) * c.h_p0 + c.h_p);
}

inline Rational coeff_lambda(const AlgebraizationCase& c, int j) {
    const Rational half_off = Rational(2 * j - c.n) / 2; // j - n/2
    return -c.d1 - c.h_0 * half_off - c.h_00 * half_off * half_off;
}

} // namespace detail

// Exact recursion data for a case. Throws ZeroDenominator when some A_j
// vanishes for j = 0..n, in which case the recursion does not determine
// the coefficient sequence.
inline CriticalPolynomialBundle recursion_coefficients(const AlgebraizationCase& c) {
    CriticalPolynomialBundle b;
    b.case_id = c.case_id;
    b.n = c.n;
    for (int j = 0; j <= c.n; ++j)
        if (detail::coeff_a(c, j) == 0)
            throw ZeroDenominator("recursion_coefficients: A_" + std::to_string(j) +
                                  " vanishes; the recursion is not solvable for this case");
    b.lambda.resize(c.n + 1);
    for (int j = 0; j <= c.n; ++j) b.lambda[j] = detail::coeff_lambda(c, j);
    b.rho.assign(c.n + 2, Rational(0));
    for (int j = 1; j <= c.n; ++j) b.rho[j] = -detail::coeff_a(c, j - 1) * detail::coeff_g(c, j);
    b.omega.resize(c.n + 1);
    b.omega[0] = 1;
    for (int j = 0; j < c.n; ++j) b.omega[j + 1] = detail::coeff_a(c, j) * b.omega[j];
    b.monic = critical_polynomial(b.lambda, b.rho);
    return b;
}

// The same data from the per-case closed forms (telescoped products for
// omega). Used as an independent derivation in the tests.
inline CriticalPolynomialBundle recursion_coefficients_tabulated(const AlgebraizationCase& c) {
    CriticalPolynomialBundle b;
    b.case_id = c.case_id;
    b.n = c.n;
    const Rational k2 = c.k2, kp2 = c.kp2, m = c.m, l = c.l;
    const Rational n(c.n);
    const Rational half(1, 2);
    std::vector<Rational> A(c.n + 1);
    b.lambda.resize(c.n + 1);
    b.rho.assign(c.n + 2, Rational(0));

    for (int ji = 0; ji <= c.n; ++ji) {
        const Rational j(ji);
        switch (c.case_id) {
            case 1:
                b.lambda[ji] = k2 * (l * (l + 1) + m * (m + 1)) / 2 + (2 - k2) * (l + m - 2 * j) * (l + m - 2 * j) / 2;
                A[ji] = k2 * (2 * m - 2 * j - 1) / 2;
                if (ji >= 1)
                    b.rho[ji] = k2 * k2 / 4 * j * (l + m + 1 - j) * (2 * j - 2 * l - 1) * (2 * m - 2 * j + 1);
                break;
            case 2:
                b.lambda[ji] =
                    k2 * (l * (l + 1) + m * (m + 1)) / 2 + (2 - k2) * (m - l - 1 - 2 * j) * (m - l - 1 - 2 * j) / 2;
                A[ji] = k2 * (2 * m - 2 * j - 1) / 2;
                if (ji >= 1) b.rho[ji] = k2 * k2 / 4 * j * (m - l - j) * (2 * m - 2 * j + 1) * (2 * j + 2 * l + 1);
                break;
            case 3:
            case 4:
                b.lambda[ji] = k2 / 4 * (2 * m * m + 2 * m - half) + (2 * l + 1) * (2 * l + 1) / 4 +
                               (2 - k2) / 2 * (2 * j - m + half) * (2 * j - m + 2 * l + Rational(3, 2));
                A[ji] = k2 * (2 * j + 2 * l + 3) / 2;
                if (ji >= 1)
                    b.rho[ji] = k2 * k2 / 4 * j * (j - m - half) * (2 * j - 2 * m + 2 * l) * (2 * j + 2 * l + 1);
                break;
            case 5:
            case 6:
                b.lambda[ji] = k2 / 4 * (2 * l * l + 2 * l - half) + (2 * m + 1) * (2 * m + 1) / 4 +
                               (2 - k2) / 2 * (2 * j - l + half) * (2 * j - l + 2 * m + Rational(3, 2));
                A[ji] = -k2 * (2 * j + 2 * m + 3) / 2;
                if (ji >= 1)
                    b.rho[ji] = k2 * k2 / 4 * j * (j - l - half) * (2 * j - 2 * l + 2 * m) * (2 * j + 2 * m + 1);
                break;
            case 7:
                b.lambda[ji] = -kp2 / 2 * (n + 1) * (n + 4) - (1 + k2) / 2 * (n - 2 * j) * (n - 2 * j);
                A[ji] = kp2 * (2 * j + 5) / 2;
                if (ji >= 1) b.rho[ji] = kp2 * kp2 / 4 * j * (j - n - 1) * (2 * j - 2 * n - 5) * (2 * j + 3);
                break;
            case 8:
                b.lambda[ji] = -(n + 1) * (n + 4) / 2 - (1 - 2 * k2) / 2 * (n - 2 * j) * (n - 2 * j);
                A[ji] = (2 * j + 5) / 2;
                if (ji >= 1) b.rho[ji] = Rational(1, 4) * j * (j - n - 1) * (2 * j - 2 * n - 5) * (2 * j + 3);
                break;
            default:
                throw Error("recursion_coefficients_tabulated: case id out of range");
        }
    }
    b.omega.resize(c.n + 1);
    b.omega[0] = 1;
    for (int j = 0; j < c.n; ++j) b.omega[j + 1] = A[j] * b.omega[j];
    b.monic = critical_polynomial(b.lambda, b.rho);
    return b;
}

// Coefficient sequence P_0 .. P_{n+1} of the original (unnormalized)
// recursion at a given energy, in double precision. The eigenfunction
// series consumes these values directly; P_{n+1}(E) = 0 characterizes
// the algebraic energies.
inline std::vector<double> raw_sequence(const AlgebraizationCase& c, double E) {
    std::vector<double> p(c.n + 2);
    p[0] = 1.0;
    double prev = 0.0;
    for (int j = 0; j <= c.n; ++j) {
        const double a = to_double(detail::coeff_a(c, j));
        const double g = to_double(detail::coeff_g(c, j));
        const double lam = to_double(detail::coeff_lambda(c, j));
        p[j + 1] = ((E - lam) * p[j] + g * prev) / a;
        prev = p[j];
    }
    return p;
}

// Double-precision evaluator for the monic critical polynomial and its
// derivative, via the three-term recursion (no coefficient expansion, so
// it is stable for moderate n and fast inside root scans).
class CriticalEvaluator {
  public:
    explicit CriticalEvaluator(const CriticalPolynomialBundle& b) : n_(b.n) {
        lambda_.reserve(b.lambda.size());
        for (const auto& v : b.lambda) lambda_.push_back(to_double(v));
        rho_.reserve(b.rho.size());
        for (const auto& v : b.rho) rho_.push_back(to_double(v));
    }

    // value and derivative of Q_{n+1} at E
    std::pair<double, double> operator()(double E) const {
        double qm1 = 0.0, q = 1.0;   // Q_{-1}, Q_0
        double dm1 = 0.0, dq = 0.0;  // derivatives
        for (int j = 0; j <= n_; ++j) {
            const double qn = (E - lambda_[j]) * q - rho_[j] * qm1;
            const double dn = q + (E - lambda_[j]) * dq - rho_[j] * dm1;
            qm1 = q;
            q = qn;
            dm1 = dq;
            dq = dn;
        }
        return {q, dq};
    }

    int degree() const { return n_ + 1; }
    const std::vector<double>& lambda() const { return lambda_; }
    const std::vector<double>& rho() const { return rho_; }

  private:
    int n_;
    std::vector<double> lambda_, rho_;
};

} // namespace qes

#endif // QES_RECURRENCE_HPP
