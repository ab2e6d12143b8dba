// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Arithmetic in the real quadratic extension Q(sqrt(s)) and its
// complexification. The case catalog needs exact arithmetic with the
// complementary modulus k' = sqrt(1-k^2), whose square is rational; elements
// are stored as a + b*k'. When s is a perfect rational square the extension
// collapses to Q and b is folded into a, which keeps division well defined
// for moduli like k^2 = 3/4.

#ifndef QES_QUADEXT_HPP
#define QES_QUADEXT_HPP

#include "qes/errors.hpp"
#include "qes/rational.hpp"

namespace qes {

class QuadExt {
  public:
    QuadExt() = default;
    QuadExt(Rational a, Rational b, Rational s) : a_(std::move(a)), b_(std::move(b)), s_(std::move(s)) {
        normalize();
    }
    // Rational embedding; compatible with any extension.
    explicit QuadExt(Rational a) : a_(std::move(a)) {}
    QuadExt(int a) : a_(a) {} // NOLINT: implicit for literal arithmetic

    const Rational& rat() const {
        if (!is_rational()) throw Error("QuadExt: irrational value where a rational was required");
        return a_;
    }
    const Rational& base() const { return a_; }
    const Rational& root_coeff() const { return b_; }
    const Rational& root_sq() const { return s_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    double value() const { return to_double(a_) + to_double(b_) * std::sqrt(to_double(s_)); }

    friend QuadExt operator-(const QuadExt& x) { return raw(-x.a_, -x.b_, x.s_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return raw(x.a_ + y.a_, x.b_ + y.b_, merge(x, y));
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        const Rational s = merge(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * s, x.a_ * y.b_ + x.b_ * y.a_, s);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        const Rational s = merge(x, y);
        const Rational nrm = y.a_ * y.a_ - y.b_ * y.b_ * s; // (a+b r)(a-b r)
        if (nrm == 0) throw ZeroDenominator("QuadExt: division by zero");
        return x * QuadExt(y.a_ / nrm, -y.b_ / nrm, s);
    }
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.s_ == y.s_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  private:
    static QuadExt raw(Rational a, Rational b, Rational s) {
        QuadExt r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.s_ = std::move(s);
        return r;
    }
    // The radicand travels with each element; mixing two genuinely
    // irrational elements from different extensions is a logic error.
    static Rational merge(const QuadExt& x, const QuadExt& y) {
        if (x.b_ == 0) return y.s_;
        if (y.b_ == 0) return x.s_;
        if (x.s_ != y.s_) throw Error("QuadExt: mixed radicands");
        return x.s_;
    }
    void normalize() {
        if (s_ < 0) throw Error("QuadExt: negative radicand");
        if (b_ == 0) {
            s_ = 0;
            return;
        }
        if (const auto root = exact_sqrt(s_)) { // extension collapses to Q
            a_ += b_ * *root;
            b_ = 0;
            s_ = 0;
        }
    }

    Rational a_{0}, b_{0}, s_{0};
};

// Complex numbers over Q(sqrt(s)), enough to carry the imaginary raw
// coefficients and complex quartic roots exactly through the root-mapping
// transform.
class QuadExtC {
  public:
    QuadExtC() = default;
    QuadExtC(QuadExt re, QuadExt im) : re_(std::move(re)), im_(std::move(im)) {}
    QuadExtC(int re) : re_(re) {} // NOLINT: implicit for literal arithmetic
    explicit QuadExtC(QuadExt re) : re_(std::move(re)) {}
    explicit QuadExtC(Rational re) : re_(QuadExt(std::move(re))) {}

    const QuadExt& real() const { return re_; }
    const QuadExt& imag() const { return im_; }
    bool is_real() const { return im_.is_zero(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend QuadExtC operator-(const QuadExtC& z) { return {-z.re_, -z.im_}; }
    friend QuadExtC operator+(const QuadExtC& x, const QuadExtC& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
    friend QuadExtC operator-(const QuadExtC& x, const QuadExtC& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
    friend QuadExtC operator*(const QuadExtC& x, const QuadExtC& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
    }
    friend QuadExtC operator/(const QuadExtC& x, const QuadExtC& y) {
        const QuadExt nrm = y.re_ * y.re_ + y.im_ * y.im_;
        if (nrm.is_zero()) throw ZeroDenominator("QuadExtC: division by zero");
        const QuadExtC conj{y.re_ / nrm, -(y.im_ / nrm)};
        return x * conj;
    }
    QuadExtC& operator+=(const QuadExtC& y) { return *this = *this + y; }
    QuadExtC& operator-=(const QuadExtC& y) { return *this = *this - y; }
    QuadExtC& operator*=(const QuadExtC& y) { return *this = *this * y; }
    friend bool operator==(const QuadExtC& x, const QuadExtC& y) { return x.re_ == y.re_ && x.im_ == y.im_; }
    friend bool operator!=(const QuadExtC& x, const QuadExtC& y) { return !(x == y); }

  private:
    QuadExt re_{Rational(0)}, im_{Rational(0)};
};

} // namespace qes

#endif // QES_QUADEXT_HPP
