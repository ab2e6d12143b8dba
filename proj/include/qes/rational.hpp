// qes: band-edge spectra of quasi-exactly solvable elliptic potentials.
// SPDX-License-Identifier: MIT
//
// Exact rational scalar type and conversions. All case data, recursion
// coefficients and critical-polynomial coefficients are carried as rationals;
// floating point enters only at evaluation time.

#ifndef QES_RATIONAL_HPP
#define QES_RATIONAL_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "qes/errors.hpp"

namespace qes {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) {
    // Route through a 50-digit float so the final rounding to double is
    // accurate regardless of the bit lengths of numerator and denominator.
    using boost::multiprecision::cpp_bin_float_50;
    return static_cast<double>(static_cast<cpp_bin_float_50>(r));
}

// Exact binary expansion of a finite double. Every finite double is a
// dyadic rational, so no information is lost.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw Error("rational_from_double: non-finite input");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double fr = std::frexp(x, &exp);       // x = fr * 2^exp, 0.5 <= |fr| < 1
    const auto mant = static_cast<std::int64_t>(std::ldexp(fr, 53));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0) {
        r *= Rational(Integer(1) << exp);
    } else {
        r /= Rational(Integer(1) << -exp);
    }
    return r;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rational& r) { return is_integer(r) && r >= 0; }

// True exactly for r in {..., -3/2, -1/2, 1/2, 3/2, ...}.
inline bool is_half_odd_integer(const Rational& r) { return denominator(r) == 2; }

inline Integer integer_value(const Rational& r) {
    if (!is_integer(r)) throw Error("integer_value: not an integer");
    return numerator(r);
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Parses "p", "p/q", or a decimal/scientific literal ("0.75", "-1.5e-2"),
// all converted exactly. Returns the value and whether the text was a
// decimal form (as opposed to an integer or ratio), so callers can flag
// floating-only provenance.
struct ParsedRational {
    Rational value;
    bool was_decimal = false;
};

namespace detail {
// Digit-by-digit accumulation; the cpp_int string constructor treats a
// leading zero as an octal prefix, which is never wanted here.
inline Integer digits_to_integer(const std::string& s, std::size_t from, const std::string& whole) {
    if (from == s.size()) throw Error("parse_rational: malformed number '" + whole + "'");
    Integer v = 0;
    for (std::size_t i = from; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw Error("parse_rational: malformed number '" + whole + "'");
        v = v * 10 + (s[i] - '0');
    }
    return v;
}

inline Integer parse_integer(const std::string& s, const std::string& whole) {
    const bool neg = !s.empty() && s[0] == '-';
    const std::size_t from = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    const Integer v = digits_to_integer(s, from, whole);
    return neg ? Integer(-v) : v;
}
} // namespace detail

inline ParsedRational parse_rational(const std::string& text) {
    if (text.empty()) throw Error("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const Integer num = detail::parse_integer(text.substr(0, slash), text);
        const Integer den = detail::parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw Error("parse_rational: zero denominator in '" + text + "'");
        return {Rational(num, den), false};
    }
    // Decimal / scientific form, converted exactly: d.ddd e±x -> integer
    // mantissa scaled by a power of ten.
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false, seen_digit = false, decimal_form = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        const char c = text[i];
        if (c == '.') {
            if (seen_point) throw Error("parse_rational: malformed number '" + text + "'");
            seen_point = true;
            decimal_form = true;
            continue;
        }
        if (c < '0' || c > '9') throw Error("parse_rational: malformed number '" + text + "'");
        seen_digit = true;
        digits += c;
        if (seen_point) ++frac_digits;
    }
    if (!seen_digit) throw Error("parse_rational: malformed number '" + text + "'");
    long exp10 = -frac_digits;
    if (i < text.size()) { // exponent part
        decimal_form = true;
        ++i;
        if (i >= text.size()) throw Error("parse_rational: malformed exponent '" + text + "'");
        exp10 += std::stol(text.substr(i)); // throws on garbage
    }
    Rational r{detail::digits_to_integer(digits, 0, text)};
    if (neg) r = -r;
    Integer pow10 = 1;
    for (long j = 0; j < std::labs(exp10); ++j) pow10 *= 10;
    if (exp10 >= 0) {
        r *= Rational(pow10);
    } else {
        r /= Rational(pow10);
    }
    return {r, decimal_form};
}

// Integer square root test; returns the exact root when x is a perfect
// square. Used to collapse the quadratic field extension Q(k') to Q when
// k'^2 happens to be a square (e.g. k^2 = 3/4).
inline std::optional<Integer> exact_sqrt(const Integer& x) {
    if (x < 0) return std::nullopt;
    const Integer r = boost::multiprecision::sqrt(x);
    if (r * r == x) return r;
    return std::nullopt;
}

inline std::optional<Rational> exact_sqrt(const Rational& x) {
    const auto rn = exact_sqrt(numerator(x));
    if (!rn) return std::nullopt;
    const auto rd = exact_sqrt(denominator(x));
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

} // namespace qes

#endif // QES_RATIONAL_HPP
