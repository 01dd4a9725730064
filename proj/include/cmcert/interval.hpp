#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "rational.hpp"

namespace cmcert {

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double next_down(double x) { return std::nextafter(x, -kInf); }
inline double next_up(double x) { return std::nextafter(x, kInf); }

// Directed addition via two-sum: the rounding error of a+b is recovered
// exactly, so the nudge fires only when the rounded sum is on the wrong side.
inline double add_dir(double a, double b, bool up) {
    double s = a + b;
    if (!std::isfinite(s)) {
        if (std::isnan(s)) return s;
        // Overflow: the exact sum lies beyond the largest finite double.
        if (s > 0) return up ? kInf : std::numeric_limits<double>::max();
        return up ? std::numeric_limits<double>::lowest() : -kInf;
    }
    double bv = s - a;
    double err = (a - (s - bv)) + (b - bv);
    if (up ? err > 0 : err < 0) s = up ? next_up(s) : next_down(s);
    return s;
}

inline double mul_dir(double a, double b, bool up) {
    double p = a * b;
    if (!std::isfinite(p)) {
        if (std::isnan(p)) return p;
        if (p > 0) return up ? kInf : std::numeric_limits<double>::max();
        return up ? std::numeric_limits<double>::lowest() : -kInf;
    }
    double err = std::fma(a, b, -p);
    if (up ? err > 0 : err < 0) p = up ? next_up(p) : next_down(p);
    return p;
}

inline double div_dir(double a, double b, bool up) {
    double q = a / b;
    if (!std::isfinite(q)) {
        if (std::isnan(q)) return q;
        if (q > 0) return up ? kInf : std::numeric_limits<double>::max();
        return up ? std::numeric_limits<double>::lowest() : -kInf;
    }
    double rem = std::fma(-q, b, a);  // exact a - q*b
    if (rem != 0) {
        bool exact_above = (rem > 0) == (b > 0);
        if (up && exact_above) q = next_up(q);
        if (!up && !exact_above) q = next_down(q);
    }
    return q;
}

inline double nudge(double x, int ulps, bool up) {
    for (int i = 0; i < ulps; ++i) x = up ? next_up(x) : next_down(x);
    return x;
}

}  // namespace detail

/// Outward-rounded enclosure [lo, hi] with double endpoints.
struct Interval {
    double lo;
    double hi;

    Interval() : lo(0), hi(0) {}
    Interval(double v) : lo(v), hi(v) {
        if (std::isnan(v)) throw std::domain_error("Interval: NaN endpoint");
    }
    Interval(double l, double h) : lo(l), hi(h) {
        if (std::isnan(l) || std::isnan(h) || l > h)
            throw std::domain_error("Interval: invalid endpoints");
    }

    static Interval hull(const Interval& a, const Interval& b) {
        return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
    }

    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains(const Rational& q) const {
        return rational_of(lo) <= q && q <= rational_of(hi);
    }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }

    Interval operator-() const { return Interval(-hi, -lo); }

    Interval operator+(const Interval& o) const {
        return Interval(detail::add_dir(lo, o.lo, false), detail::add_dir(hi, o.hi, true));
    }
    Interval operator-(const Interval& o) const { return *this + (-o); }

    Interval operator*(const Interval& o) const {
        double cands_lo[4] = {detail::mul_dir(lo, o.lo, false), detail::mul_dir(lo, o.hi, false),
                              detail::mul_dir(hi, o.lo, false), detail::mul_dir(hi, o.hi, false)};
        double cands_hi[4] = {detail::mul_dir(lo, o.lo, true), detail::mul_dir(lo, o.hi, true),
                              detail::mul_dir(hi, o.lo, true), detail::mul_dir(hi, o.hi, true)};
        double l = cands_lo[0], h = cands_hi[0];
        for (int i = 1; i < 4; ++i) {
            l = std::min(l, cands_lo[i]);
            h = std::max(h, cands_hi[i]);
        }
        return Interval(l, h);
    }

    Interval operator/(const Interval& o) const {
        if (o.contains_zero()) throw std::domain_error("Interval division by interval containing 0");
        double cands_lo[4] = {detail::div_dir(lo, o.lo, false), detail::div_dir(lo, o.hi, false),
                              detail::div_dir(hi, o.lo, false), detail::div_dir(hi, o.hi, false)};
        double cands_hi[4] = {detail::div_dir(lo, o.lo, true), detail::div_dir(lo, o.hi, true),
                              detail::div_dir(hi, o.lo, true), detail::div_dir(hi, o.hi, true)};
        double l = cands_lo[0], h = cands_hi[0];
        for (int i = 1; i < 4; ++i) {
            l = std::min(l, cands_lo[i]);
            h = std::max(h, cands_hi[i]);
        }
        return Interval(l, h);
    }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }
};

inline Interval interval_of(const Rational& q) {
    return Interval(to_double_down(q), to_double_up(q));
}

inline Interval pow_int(const Interval& x, int n) {
    if (n < 0) return Interval(1.0) / pow_int(x, -n);
    if (n == 0) return Interval(1.0);
    if (n % 2 == 0 && x.contains_zero()) {
        double m = std::max(-x.lo, x.hi);
        Interval mag(m);
        Interval r(1.0);
        for (int i = 0; i < n; ++i) r = r * mag;
        return Interval(0.0, r.hi);
    }
    Interval r = x;
    for (int i = 1; i < n; ++i) r = r * x;
    return r;
}

/// libm exp/ln enclosures; endpoints inflated by 2 ulp to cover the assumed
/// 2-ulp accuracy of the platform functions.
inline constexpr int kLibmUlps = 2;

inline Interval exp(const Interval& x) {
    double lo = x.lo <= -745.0 ? 0.0 : detail::nudge(std::exp(x.lo), kLibmUlps, false);
    double hi = detail::nudge(std::exp(x.hi), kLibmUlps, true);
    if (lo < 0) lo = 0;
    return Interval(lo, hi);
}

inline Interval ln(const Interval& x) {
    if (x.lo <= 0) throw std::domain_error("ln: argument must be positive");
    return Interval(detail::nudge(std::log(x.lo), kLibmUlps, false),
                    detail::nudge(std::log(x.hi), kLibmUlps, true));
}

/// x^y for x > 0 via exp(y ln x).
inline Interval pow_real(const Interval& x, const Interval& y) {
    if (x.lo <= 0) throw std::domain_error("pow_real: base must be positive");
    return exp(y * ln(x));
}

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << "[" << iv.lo << ", " << iv.hi << "]";
}

}  // namespace cmcert
