#pragma once

#include <algorithm>
#include <stdexcept>

#include "interval.hpp"
#include "rational.hpp"

namespace cmcert {

/// Interval with exact rational endpoints. Arithmetic is exact (no rounding),
/// so enclosures stay as tight as the inputs allow; tighten() trades exactness
/// for bounded representation size when denominators grow.
struct ExactInterval {
    Rational lo;
    Rational hi;

    ExactInterval() : lo(0), hi(0) {}
    ExactInterval(Rational v) : lo(v), hi(std::move(v)) {}
    ExactInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::domain_error("ExactInterval: lo > hi");
    }
    explicit ExactInterval(const Interval& iv)
        : lo(rational_of(iv.lo)), hi(rational_of(iv.hi)) {}

    static ExactInterval centered(const Rational& c, const Rational& radius) {
        return ExactInterval(c - radius, c + radius);
    }
    static ExactInterval hull(const ExactInterval& a, const ExactInterval& b) {
        return ExactInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
    }

    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    ExactInterval operator-() const { return ExactInterval(-hi, -lo); }
    ExactInterval operator+(const ExactInterval& o) const {
        return ExactInterval(lo + o.lo, hi + o.hi);
    }
    ExactInterval operator-(const ExactInterval& o) const { return *this + (-o); }
    ExactInterval operator*(const ExactInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return ExactInterval(std::min(std::min(a, b), std::min(c, d)),
                             std::max(std::max(a, b), std::max(c, d)));
    }
    ExactInterval operator/(const ExactInterval& o) const {
        if (o.contains_zero())
            throw std::domain_error("ExactInterval division by interval containing 0");
        Rational a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
        return ExactInterval(std::min(std::min(a, b), std::min(c, d)),
                             std::max(std::max(a, b), std::max(c, d)));
    }
    ExactInterval& operator+=(const ExactInterval& o) { return *this = *this + o; }
    ExactInterval& operator-=(const ExactInterval& o) { return *this = *this - o; }
    ExactInterval& operator*=(const ExactInterval& o) { return *this = *this * o; }

    /// Round endpoints outward to dyadics with at most `bits` fractional bits.
    ExactInterval tighten(unsigned bits = 192) const {
        return ExactInterval(dyadic_floor(lo, bits), dyadic_ceil(hi, bits));
    }

    Interval to_interval() const {
        return Interval(to_double_down(lo), to_double_up(hi));
    }
};

inline ExactInterval pow_int(const ExactInterval& x, int n) {
    if (n < 0) return ExactInterval(Rational(1)) / pow_int(x, -n);
    if (n == 0) return ExactInterval(Rational(1));
    if (n % 2 == 0 && x.contains_zero()) {
        Rational m = std::max<Rational>(-x.lo, x.hi);
        return ExactInterval(Rational(0), pow_rat(m, n));
    }
    ExactInterval r = x;
    for (int i = 1; i < n; ++i) r = r * x;
    return r;
}

}  // namespace cmcert
