#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cmcert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

/// Exact rational value of a finite double (every finite double is rational).
inline Rational rational_of(double d) {
    if (!std::isfinite(d)) throw std::domain_error("rational_of: non-finite double");
    return Rational(d);
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Rational pow_rat(const Rational& q, int e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (q == 0) throw std::domain_error("pow_rat: zero to negative power");
        return Rational(1) / pow_rat(q, -e);
    }
    Rational base = q, acc = 1;
    int n = e;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline Rational abs_rat(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Round toward -inf to a dyadic with the given number of fractional bits.
inline Rational dyadic_floor(const Rational& q, unsigned bits) {
    BigInt scale = BigInt(1) << bits;
    BigInt n = numerator(q) * scale, d = denominator(q);
    BigInt quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return Rational(quo, scale);
}

inline Rational dyadic_ceil(const Rational& q, unsigned bits) {
    return -dyadic_floor(-q, bits);
}

/// Nearest double, then nudged so the result is <= q.
inline double to_double_down(const Rational& q) {
    double d = q.convert_to<double>();
    if (!std::isfinite(d))
        return d > 0 ? std::numeric_limits<double>::max() : -std::numeric_limits<double>::infinity();
    if (rational_of(d) > q) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
    return d;
}

inline double to_double_up(const Rational& q) {
    double d = q.convert_to<double>();
    if (!std::isfinite(d))
        return d > 0 ? std::numeric_limits<double>::infinity() : std::numeric_limits<double>::lowest();
    if (rational_of(d) < q) d = std::nextafter(d, std::numeric_limits<double>::infinity());
    return d;
}

/// Parse "a/b", integers, and decimal notation ("0.25", "1e-3") as exact rationals.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(n, d);
    }
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    std::string digits;
    long frac_digits = 0, exponent = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            exponent = std::stol(s.substr(i + 1));
            break;
        } else {
            throw std::invalid_argument("parse_rational: bad input '" + s + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("parse_rational: bad input '" + s + "'");
    // cpp_int treats a leading 0 as an octal prefix; strip it
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    BigInt n(digits.empty() ? "0" : digits);
    if (neg) n = -n;
    long p10 = exponent - frac_digits;
    BigInt ten = 10;
    Rational q(n);
    if (p10 > 0)
        q *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(p10)));
    else if (p10 < 0)
        q /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-p10)));
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace cmcert
