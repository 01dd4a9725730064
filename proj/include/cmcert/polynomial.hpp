#pragma once

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact_interval.hpp"
#include "rational.hpp"

namespace cmcert {

/// Dense polynomial with exact rational coefficients, coefficient index =
/// degree, trailing zeros trimmed (the zero polynomial has no coefficients).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        std::vector<Rational> c(coeffs_);
        for (auto& v : c) v = -v;
        return Polynomial(std::move(c));
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return Polynomial(std::move(c));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(c));
    }

    Polynomial operator*(const Rational& s) const {
        if (s == 0) return Polynomial();
        std::vector<Rational> c(coeffs_);
        for (auto& v : c) v *= s;
        return Polynomial(std::move(c));
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<Rational> c(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(i);
        return Polynomial(std::move(c));
    }

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    ExactInterval eval(const ExactInterval& x) const {
        ExactInterval acc{Rational(0)};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + ExactInterval(*it);
        return acc;
    }

    double eval(double x) const {
        double acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + it->convert_to<double>();
        return acc;
    }

    /// Exact coefficients of t -> p(t + c) (in-place Taylor shift).
    Polynomial shift(const Rational& c) const {
        std::vector<Rational> a(coeffs_);
        int n = static_cast<int>(a.size());
        for (int i = 0; i < n - 1; ++i)
            for (int j = n - 2; j >= i; --j) a[j] += c * a[j + 1];
        return Polynomial(std::move(a));
    }

    /// Exact quotient; throws if the division is not exact.
    Polynomial divide_exact(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        Polynomial rem = *this, quo;
        std::vector<Rational> q(is_zero() ? 0 : std::max(0, degree() - d.degree() + 1), Rational(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int k = rem.degree() - d.degree();
            Rational f = rem.leading() / d.leading();
            q[k] = f;
            std::vector<Rational> sub(k + d.coeffs_.size(), Rational(0));
            for (size_t i = 0; i < d.coeffs_.size(); ++i) sub[k + i] = f * d.coeffs_[i];
            rem = rem - Polynomial(std::move(sub));
        }
        if (!rem.is_zero()) throw std::domain_error("Polynomial: inexact division");
        return Polynomial(std::move(q));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += (coeffs_[i] > 0 ? " + " : " - ");
            else if (coeffs_[i] < 0) s += "-";
            Rational a = abs_rat(coeffs_[i]);
            if (a != 1 || i == 0) s += to_string(a);
            if (i > 0) {
                if (a != 1) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

/// Number of sign variations in the coefficient sequence (zeros skipped):
/// an upper bound on the count of positive real roots.
inline int descartes_bound(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("descartes_bound: zero polynomial");
    int variations = 0, prev = 0;
    for (const auto& c : p.coefficients()) {
        int s = sign_of(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

/// Monic gcd over the rationals (Euclid).
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        // remainder of a by b
        Polynomial r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            Rational f = r.leading() / b.leading();
            std::vector<Rational> sub(k + b.coefficients().size(), Rational(0));
            for (size_t i = 0; i < b.coefficients().size(); ++i)
                sub[k + i] = f * b.coefficients()[i];
            r = r - Polynomial(std::move(sub));
        }
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace cmcert
