// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Small dense linear algebra: eigenvalues of a real nonsymmetric matrix via
// balancing, elimination to upper Hessenberg form and the Francis
// double-shift QR iteration (after the EISPACK routines BALANC, ELMHES and
// HQR), plus a symmetric tridiagonal-with-corner eigenvalue solver based on
// Sturm-sequence bisection. Sizes here are desk scale: matrices up to a few
// dozen rows, grids up to a few thousand points.

#ifndef QES_LINALG_HPP
#define QES_LINALG_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "qes/errors.hpp"

namespace qes {

class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

namespace detail {

// Parlett-Reinsch balancing: diagonal similarity with radix-power scales
// until every row/column pair has comparable 1-norms.
inline void balance(Matrix& a) {
    const int n = a.rows();
    const double radix = 2.0, sqrdx = radix * radix;
    bool last = false;
    while (!last) {
        last = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c != 0.0 && r != 0.0) {
                double g = r / radix, f = 1.0, s = c + r;
                while (c < g) {
                    f *= radix;
                    c *= sqrdx;
                }
                g = r * radix;
                while (c > g) {
                    f /= radix;
                    c /= sqrdx;
                }
                if ((c + r) / f < 0.95 * s) {
                    last = false;
                    g = 1.0 / f;
                    for (int j = 0; j < n; ++j) a(i, j) *= g;
                    for (int j = 0; j < n; ++j) a(j, i) *= f;
                }
            }
        }
    }
}

// Reduction to upper Hessenberg form by stabilized elementary
// transformations (Gaussian elimination with pivoting).
inline void hessenberg(Matrix& a) {
    const int n = a.rows();
    for (int m = 1; m < n - 1; ++m) {
        double x = 0.0;
        int i = m;
        for (int j = m; j < n; ++j)
            if (std::abs(a(j, m - 1)) > std::abs(x)) {
                x = a(j, m - 1);
                i = j;
            }
        if (i != m) {
            for (int j = m - 1; j < n; ++j) std::swap(a(i, j), a(m, j));
            for (int j = 0; j < n; ++j) std::swap(a(j, i), a(j, m));
        }
        if (x != 0.0) {
            for (int j = m + 1; j < n; ++j) {
                double y = a(j, m - 1);
                if (y != 0.0) {
                    y /= x;
                    a(j, m - 1) = y;
                    for (int k = m; k < n; ++k) a(j, k) -= y * a(m, k);
                    for (int k = 0; k < n; ++k) a(k, m) += y * a(k, j);
                }
            }
        }
    }
    for (int i = 2; i < n; ++i)
        for (int j = 0; j < i - 1; ++j) a(i, j) = 0.0;
}

inline double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Francis double-shift QR on an upper Hessenberg matrix; returns all
// eigenvalues as complex numbers. Destroys the matrix.
inline std::vector<std::complex<double>> hqr(Matrix& a) {
    const int n = a.rows();
    std::vector<std::complex<double>> w(n);
    const double eps = std::numeric_limits<double>::epsilon();
    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
    int nn = n - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 1; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= eps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = a(nn, nn);
            if (l == nn) { // one real eigenvalue deflates
                w[nn--] = x + t;
            } else {
                double y = a(nn - 1, nn - 1);
                double u = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) { // a 2x2 block deflates
                    double p = 0.5 * (y - x);
                    double q = p * p + u;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) { // real pair
                        z = p + sign_of(z, p);
                        w[nn - 1] = w[nn] = x + z;
                        if (z != 0.0) w[nn] = x - u / z;
                    } else { // conjugate pair
                        w[nn] = {x + p, z};
                        w[nn - 1] = std::conj(w[nn]);
                    }
                    nn -= 2;
                } else { // QR sweep
                    if (its == 60) throw Error("hqr: too many iterations");
                    if (its == 10 || its == 20 || its == 30 || its == 40 || its == 50) {
                        t += x;
                        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                        const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        u = -0.4375 * s * s;
                    }
                    ++its;
                    int m;
                    double p = 0, q = 0, r = 0, z = 0;
                    for (m = nn - 2; m >= l; --m) {
                        z = a(m, m);
                        const double rr = x - z, ss = y - z;
                        p = (rr * ss - u) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - rr - ss;
                        r = a(m + 2, m + 1);
                        const double s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double uu = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double vv =
                            std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
                        if (uu <= eps * vv) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0.0;
                        if (i != m + 2) a(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = k + 1 != nn ? a(k + 2, k - 1) : 0.0;
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s != 0.0) {
                            if (k == m) {
                                if (l != m) a(k, k - 1) = -a(k, k - 1);
                            } else {
                                a(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (int j = k; j <= nn; ++j) { // row update
                                p = a(k, j) + q * a(k + 1, j);
                                if (k + 1 != nn) {
                                    p += r * a(k + 2, j);
                                    a(k + 2, j) -= p * z;
                                }
                                a(k + 1, j) -= p * y;
                                a(k, j) -= p * x;
                            }
                            const int mmin = nn < k + 3 ? nn : k + 3;
                            for (int i = l; i <= mmin; ++i) { // column update
                                p = x * a(i, k) + y * a(i, k + 1);
                                if (k + 1 != nn) {
                                    p += z * a(i, k + 2);
                                    a(i, k + 2) -= p * r;
                                }
                                a(i, k + 1) -= p * q;
                                a(i, k) -= p;
                            }
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
    return w;
}

} // namespace detail

// Eigenvalues of a general real square matrix (the input is copied).
inline std::vector<std::complex<double>> eigenvalues(Matrix a) {
    if (a.rows() != a.cols()) throw Error("eigenvalues: matrix must be square");
    if (a.rows() == 0) return {};
    if (a.rows() == 1) return {std::complex<double>(a(0, 0), 0.0)};
    detail::balance(a);
    detail::hessenberg(a);
    return detail::hqr(a);
}

// Symmetric tridiagonal matrix with an extra symmetric coupling between the
// first and last index (the wrap entry of a periodic or antiperiodic
// finite-difference operator). corner = 0 gives the plain Dirichlet case.
struct CyclicTridiagonal {
    std::vector<double> diag; // size N
    std::vector<double> off;  // size N-1
    double corner = 0.0;      // entry (0, N-1) = (N-1, 0)
};

// Number of eigenvalues strictly below x: negative pivots of the LDL^T
// factorization of A - xI. The corner is eliminated as a bordered last
// row/column whose single evolving fill-in entry is carried along, so the
// cost stays O(N). When a pivot underflows the floor (x sits on an
// eigenvalue of a leading principal minor) the count at that one point is
// unreliable; *breakdown reports this so a caller can move x slightly.
inline int count_below(const CyclicTridiagonal& T, double x, bool* breakdown = nullptr) {
    const int n = static_cast<int>(T.diag.size());
    if (n < 3) throw Error("count_below: need at least 3 rows");
    double scale = 1.0;
    for (double v : T.diag) scale = std::max(scale, std::abs(v));
    for (double v : T.off) scale = std::max(scale, std::abs(v));
    scale = std::max(scale, std::max(std::abs(T.corner), std::abs(x)));
    const double pivmin = 1e-20 * scale;
    if (breakdown) *breakdown = false;
    int neg = 0;
    double d = T.diag[0] - x;
    if (std::abs(d) < pivmin) {
        d = -pivmin;
        if (breakdown) *breakdown = true;
    }
    double wlast = T.corner; // evolving entry (N-1, i)
    double dlast = T.diag[n - 1] - x;
    for (int i = 0; i + 1 < n; ++i) {
        if (d < 0) ++neg;
        dlast -= wlast * wlast / d;
        if (i + 1 == n - 1) break; // dlast is now the final pivot
        const double wnext = (i + 1 == n - 2 ? T.off[n - 2] : 0.0) - T.off[i] * wlast / d;
        d = T.diag[i + 1] - x - T.off[i] * T.off[i] / d;
        if (std::abs(d) < pivmin) {
            d = -pivmin;
            if (breakdown) *breakdown = true;
        }
        wlast = wnext;
    }
    if (dlast < 0) ++neg;
    return neg;
}

// k-th smallest eigenvalue (k = 0-based) by bisection on count_below.
inline double kth_eigenvalue(const CyclicTridiagonal& T, int k) {
    const int n = static_cast<int>(T.diag.size());
    double lo = T.diag[0], hi = T.diag[0];
    for (int i = 0; i < n; ++i) {
        double r = std::abs(T.corner) * (i == 0 || i == n - 1 ? 1.0 : 0.0);
        if (i > 0) r += std::abs(T.off[i - 1]);
        if (i + 1 < n) r += std::abs(T.off[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        bool bad = false;
        int c = count_below(T, mid, &bad);
        for (int tries = 0; bad && tries < 8; ++tries) {
            mid += (hi - lo) * 1e-6; // step off the breakdown point
            c = count_below(T, mid, &bad);
        }
        if (c > k) {
            hi = mid;
        } else {
            lo = mid;
        }
        if (hi - lo <= 1e-14 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)))) break;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<double> lowest_eigenvalues(const CyclicTridiagonal& T, int count) {
    std::vector<double> ev(count);
    for (int k = 0; k < count; ++k) ev[k] = kth_eigenvalue(T, k);
    return ev;
}

} // namespace qes

#endif // QES_LINALG_HPP
