#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "exact_interval.hpp"
#include "interval.hpp"
#include "polynomial.hpp"

namespace cmcert {

/// Finite sum  t -> sum_j e^{j t} p_j(t)  with nonnegative integer exponents j
/// and exact rational polynomials p_j (zero polynomials removed).
class ExpPoly {
public:
    ExpPoly() = default;

    static ExpPoly term(int j, Polynomial p) {
        if (j < 0) throw std::domain_error("ExpPoly: negative exponent");
        ExpPoly e;
        if (!p.is_zero()) e.terms_[j] = std::move(p);
        return e;
    }

    const std::map<int, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Polynomial poly(int j) const {
        auto it = terms_.find(j);
        return it == terms_.end() ? Polynomial() : it->second;
    }

    bool operator==(const ExpPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ExpPoly& o) const { return !(*this == o); }

    ExpPoly operator-() const {
        ExpPoly r;
        for (const auto& [j, p] : terms_) r.terms_[j] = -p;
        return r;
    }

    ExpPoly operator+(const ExpPoly& o) const {
        ExpPoly r = *this;
        for (const auto& [j, p] : o.terms_) {
            Polynomial s = r.poly(j) + p;
            if (s.is_zero()) r.terms_.erase(j);
            else r.terms_[j] = std::move(s);
        }
        return r;
    }
    ExpPoly operator-(const ExpPoly& o) const { return *this + (-o); }

    ExpPoly operator*(const ExpPoly& o) const {
        ExpPoly r;
        for (const auto& [j1, p1] : terms_)
            for (const auto& [j2, p2] : o.terms_) {
                Polynomial s = r.poly(j1 + j2) + p1 * p2;
                if (s.is_zero()) r.terms_.erase(j1 + j2);
                else r.terms_[j1 + j2] = std::move(s);
            }
        return r;
    }

    ExpPoly operator*(const Rational& s) const {
        ExpPoly r;
        if (s == 0) return r;
        for (const auto& [j, p] : terms_) r.terms_[j] = p * s;
        return r;
    }

    /// Multiply by e^{k t}: shifts every exponent by k.
    ExpPoly exp_shift(int k) const {
        ExpPoly r;
        for (const auto& [j, p] : terms_) {
            if (j + k < 0) throw std::domain_error("ExpPoly: exp_shift below zero");
            r.terms_[j + k] = p;
        }
        return r;
    }

    /// Exact term-wise derivative: (j, p) -> (j, j*p + p').
    ExpPoly derivative() const {
        ExpPoly r;
        for (const auto& [j, p] : terms_) {
            Polynomial d = p * Rational(j) + p.derivative();
            if (!d.is_zero()) r.terms_[j] = std::move(d);
        }
        return r;
    }

    /// Exact Taylor coefficient of t^m at t = 0:
    /// sum_j sum_{i <= min(m, deg p_j)} p_j[i] * j^{m-i} / (m-i)!.
    Rational taylor_coeff(unsigned m) const {
        Rational acc = 0;
        for (const auto& [j, p] : terms_) {
            for (int i = 0; i <= p.degree() && i <= static_cast<int>(m); ++i) {
                unsigned k = m - i;
                Rational jp = (k == 0) ? Rational(1) : pow_rat(Rational(j), k);
                acc += p.coeff(i) * jp / Rational(factorial(k));
            }
        }
        return acc;
    }

    /// Enclosure of the value on an interval via interval exp and exact
    /// coefficients (Horner per term).
    Interval eval(const Interval& t) const {
        Interval acc(0.0);
        for (const auto& [j, p] : terms_) {
            ExactInterval pt = p.eval(ExactInterval(t));
            Interval e = (j == 0) ? Interval(1.0) : exp(Interval(j) * t);
            acc += e * pt.to_interval();
        }
        return acc;
    }

    /// Enclosure at a small rational t > 0 from the exact Taylor expansion with
    /// a rigorous tail bound. Essential where the closed form cancels
    /// catastrophically (the theta chain vanishes to high order at 0).
    ///
    /// Tail bound: |c_m| <= sum_i A_i J^{m-i}/(m-i)! with A_i = sum_j |p_j[i]|,
    /// so sum_{m>N} |c_m| t^m <= sum_i A_i t^i (Jt)^{N+1-i}/(N+1-i)! e^{Jt}.
    ExactInterval eval_series(const Rational& t, unsigned terms = 32) const {
        if (t < 0) throw std::domain_error("ExpPoly::eval_series: t must be >= 0");
        int max_j = 0, max_deg = 0;
        for (const auto& [j, p] : terms_) {
            max_j = std::max(max_j, j);
            max_deg = std::max(max_deg, p.degree());
        }
        unsigned N = std::max<unsigned>(terms, max_deg + 2);
        Rational partial = 0, tp = 1;
        for (unsigned m = 0; m <= N; ++m) {
            partial += taylor_coeff(m) * tp;
            tp *= t;
        }
        // A_i = sum over terms of |coefficient of t^i|
        std::vector<Rational> A(max_deg + 1, Rational(0));
        for (const auto& [j, p] : terms_)
            for (int i = 0; i <= p.degree(); ++i) A[i] += abs_rat(p.coeff(i));
        Rational jt = Rational(max_j) * t;
        Rational exp_hi = rational_of(exp(interval_of(jt)).hi);
        Rational tail = 0;
        Rational ti = 1;
        for (int i = 0; i <= max_deg; ++i) {
            unsigned k = N + 1 - i;
            tail += A[i] * ti * pow_rat(jt, k) / Rational(factorial(k));
            ti *= t;
        }
        tail *= exp_hi;
        return ExactInterval(partial - tail, partial + tail);
    }

    /// Plain double evaluation (for quadrature-style oracles, not enclosures).
    double eval_point(double t) const {
        double acc = 0;
        for (const auto& [j, p] : terms_) acc += std::exp(j * t) * p.eval(t);
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [j, p] : terms_) {
            if (!s.empty()) s += " + ";
            if (j == 0) s += "(" + p.str("t") + ")";
            else s += "e^{" + std::to_string(j) + "t}*(" + p.str("t") + ")";
        }
        return s;
    }

private:
    std::map<int, Polynomial> terms_;
};

inline ExpPoly operator*(const Rational& s, const ExpPoly& e) { return e * s; }

inline std::ostream& operator<<(std::ostream& os, const ExpPoly& e) { return os << e.str(); }

}  // namespace cmcert
