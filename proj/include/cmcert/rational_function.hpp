#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "exact_interval.hpp"
#include "polynomial.hpp"

namespace cmcert {

/// Quotient of polynomials in canonical reduced form: gcd divided out and the
/// denominator scaled monic, so structural equality is function equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(const Rational& c) : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {
        if (c == 0) num_ = Polynomial();
    }
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        canonicalize();
    }
    static RationalFunction from_poly(Polynomial p) {
        return RationalFunction(std::move(p), Polynomial::constant(1));
    }
    /// x -> x
    static RationalFunction x() { return from_poly(Polynomial::x()); }
    /// 1/(x + c)^k
    static RationalFunction inv_shifted_power(const Rational& c, int k) {
        Polynomial den = Polynomial::constant(1);
        Polynomial lin({c, Rational(1)});
        for (int i = 0; i < k; ++i) den = den * lin;
        return RationalFunction(Polynomial::constant(1), den);
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction operator*(const Rational& s) const {
        return RationalFunction(num_ * s, den_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    /// Exact quotient-rule derivative, canonicalized.
    RationalFunction derivative() const {
        if (num_.is_zero()) return RationalFunction();
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw std::domain_error("RationalFunction: pole at evaluation point");
        return num_.eval(x) / d;
    }

    ExactInterval eval(const ExactInterval& x) const {
        ExactInterval d = den_.eval(x);
        if (d.contains_zero())
            throw std::domain_error("RationalFunction: pole inside evaluation interval");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "x") const {
        if (den_ == Polynomial::constant(1)) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    Polynomial num_;
    Polynomial den_;

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

inline RationalFunction operator*(const Rational& s, const RationalFunction& r) { return r * s; }

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

}  // namespace cmcert
