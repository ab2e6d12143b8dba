// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Finite dimensional representation of sl(2,R) on polynomials of degree
// at most n, and assembly of the gauged Hamiltonian matrix of a case.
// On the monomial basis z^j, j = 0..n:
//
//   T+ z^j = (j - n) z^{j+1}     (raising; annihilates z^n)
//   T0 z^j = (j - n/2) z^j
//   T- z^j = j z^{j-1}
//
// so [T+, T-] = -2 T0 and [T0, T+-] = +- T+-. Entries are rational
// (half-integers appear for odd n). The Hamiltonian
//
//   H = -sum C_ab T^a T^b - sum C_a T^a - d
//
// has imaginary linear coefficients in some cases; conjugation by
// diag(i^j) then makes the matrix real, with entries in Q(kp). The
// assembled matrix is kept exact; to_double() hands it to the dense
// eigenvalue solver.

#ifndef QES_LIEALG_HPP
#define QES_LIEALG_HPP

#include <vector>

#include "qes/cases.hpp"
#include "qes/errors.hpp"
#include "qes/linalg.hpp"
#include "qes/quadext.hpp"
#include "qes/rational.hpp"

namespace qes {

template <class T>
class SquareMat {
  public:
    SquareMat() = default;
    explicit SquareMat(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, T(0)) {}
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    int dim() const { return dim_; }

    friend SquareMat operator*(const SquareMat& x, const SquareMat& y) {
        SquareMat r(x.dim_);
        for (int i = 0; i < x.dim_; ++i)
            for (int k = 0; k < x.dim_; ++k) {
                if (x(i, k) == T(0)) continue;
                for (int j = 0; j < x.dim_; ++j) r(i, j) = r(i, j) + x(i, k) * y(k, j);
            }
        return r;
    }
    friend SquareMat operator+(const SquareMat& x, const SquareMat& y) {
        SquareMat r(x.dim_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend SquareMat operator-(const SquareMat& x, const SquareMat& y) {
        SquareMat r(x.dim_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend bool operator==(const SquareMat& x, const SquareMat& y) {
        return x.dim_ == y.dim_ && x.a_ == y.a_;
    }

  private:
    int dim_ = 0;
    std::vector<T> a_;
};

template <class T>
SquareMat<T> scaled(const SquareMat<T>& x, const T& s) {
    SquareMat<T> r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r(i, j) = x(i, j) * s;
    return r;
}

template <class T>
SquareMat<T> commutator(const SquareMat<T>& x, const SquareMat<T>& y) {
    return x * y - y * x;
}

struct GeneratorSet {
    int n = 0;
    SquareMat<Rational> tp, t0, tm;
};

inline GeneratorSet generators(int n) {
    if (n < 0) throw Error("generators: degree must be non-negative");
    GeneratorSet g;
    g.n = n;
    const int dim = n + 1;
    g.tp = SquareMat<Rational>(dim);
    g.t0 = SquareMat<Rational>(dim);
    g.tm = SquareMat<Rational>(dim);
    for (int j = 0; j <= n; ++j) {
        if (j < n) g.tp(j + 1, j) = Rational(j - n);
        g.t0(j, j) = Rational(j) - Rational(n) / 2;
        if (j > 0) g.tm(j - 1, j) = Rational(j);
    }
    return g;
}

struct GaugedHamiltonianMatrix {
    int case_id = 0;
    int n = 0;
    SquareMat<QuadExt> entries;

    Matrix to_double() const {
        Matrix a(n + 1, n + 1);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) a(i, j) = entries(i, j).value();
        return a;
    }
};

inline GaugedHamiltonianMatrix assemble_hamiltonian(const AlgebraizationCase& c) {
    const GeneratorSet g = generators(c.n);
    const int dim = c.n + 1;

    // quadratic block stays rational
    SquareMat<Rational> quad = scaled(g.tp * g.tp, c.c_pp) + scaled(g.t0 * g.t0, c.c_00) +
                               scaled(g.tm * g.tm, c.c_mm) + scaled(g.tp * g.t0 + g.t0 * g.tp, c.c_p0) +
                               scaled(g.t0 * g.tm + g.tm * g.t0, c.c_0m);

    SquareMat<QuadExtC> h(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            QuadExtC v = QuadExtC(QuadExt(Rational(0) - quad(i, j)));
            v = v - c.c_plus * QuadExtC(QuadExt(g.tp(i, j)));
            v = v - c.c_zero * QuadExtC(QuadExt(g.t0(i, j)));
            v = v - c.c_minus * QuadExtC(QuadExt(g.tm(i, j)));
            if (i == j) v = v - QuadExtC(QuadExt(c.d));
            h(i, j) = v;
        }

    bool real = true;
    for (int i = 0; i < dim && real; ++i)
        for (int j = 0; j < dim && real; ++j)
            if (!h(i, j).is_real()) real = false;

    if (!real) {
        // conjugate by diag(i^j): entry (a,b) picks up i^(b-a)
        const QuadExtC iu{QuadExt(Rational(0)), QuadExt(Rational(1))};
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                int p = ((j - i) % 4 + 4) % 4;
                QuadExtC f(1);
                for (int q = 0; q < p; ++q) f = f * iu;
                h(i, j) = h(i, j) * f;
            }
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (!h(i, j).is_real())
                    throw NonRealAssembly("assemble_hamiltonian: matrix is not real even after the "
                                          "diagonal phase similarity");
    }

    GaugedHamiltonianMatrix out;
    out.case_id = c.case_id;
    out.n = c.n;
    out.entries = SquareMat<QuadExt>(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out.entries(i, j) = h(i, j).real();
    return out;
}

} // namespace qes

#endif // QES_LIEALG_HPP
