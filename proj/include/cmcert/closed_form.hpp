#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "exact_interval.hpp"
#include "rational_function.hpp"

namespace cmcert {

/// psi^{(order)}(x + shift); order 0 is the digamma function itself.
struct PolygammaFactor {
    int order = 0;
    Rational shift;

    PolygammaFactor() = default;
    PolygammaFactor(int n, Rational s) : order(n), shift(std::move(s)) {
        if (n < 0 || n > 64) throw std::domain_error("PolygammaFactor: order out of range");
        if (shift < 0) throw std::domain_error("PolygammaFactor: negative shift");
    }
    auto key() const { return std::make_pair(order, shift); }
    bool operator<(const PolygammaFactor& o) const { return key() < o.key(); }
    bool operator==(const PolygammaFactor& o) const { return key() == o.key(); }
};

/// ln(x + shift)
struct LogFactor {
    Rational shift;

    LogFactor() = default;
    explicit LogFactor(Rational s) : shift(std::move(s)) {
        if (shift < 0) throw std::domain_error("LogFactor: negative shift");
    }
    bool operator<(const LogFactor& o) const { return shift < o.shift; }
    bool operator==(const LogFactor& o) const { return shift == o.shift; }
};

/// ln Gamma(x + shift); appears only linearly (constant coefficient, no other
/// transcendental factors in the same term).
struct LnGammaFactor {
    Rational shift;

    LnGammaFactor() = default;
    explicit LnGammaFactor(Rational s) : shift(std::move(s)) {
        if (shift < 0) throw std::domain_error("LnGammaFactor: negative shift");
    }
    bool operator<(const LnGammaFactor& o) const { return shift < o.shift; }
    bool operator==(const LnGammaFactor& o) const { return shift == o.shift; }
};

/// coeff(x) * prod psi-factors * prod log-factors [* lnGamma(x+s)]
struct Term {
    RationalFunction coeff;
    std::vector<PolygammaFactor> pg;
    std::vector<LogFactor> logs;
    std::optional<LnGammaFactor> lngamma;

    Term() = default;
    explicit Term(RationalFunction c) : coeff(std::move(c)) {}
    Term(RationalFunction c, std::vector<PolygammaFactor> p) : coeff(std::move(c)), pg(std::move(p)) {
        normalize();
    }

    void normalize() {
        std::sort(pg.begin(), pg.end());
        std::sort(logs.begin(), logs.end());
    }

    using Key = std::tuple<std::vector<PolygammaFactor>, std::vector<LogFactor>,
                           std::optional<LnGammaFactor>>;
    Key key() const { return {pg, logs, lngamma}; }
};

/// Sum of Terms; closed under exact differentiation
/// (psi^{(m)} -> psi^{(m+1)}, ln(x+c) -> 1/(x+c) into the coefficient,
///  lnGamma(x+c) -> psi(x+c)).
class ClosedForm {
public:
    ClosedForm() = default;
    explicit ClosedForm(std::vector<Term> terms) : terms_(std::move(terms)) { merge(); }

    static ClosedForm constant(const Rational& c) {
        ClosedForm f;
        if (c != 0) f.terms_.push_back(Term(RationalFunction(c)));
        return f;
    }
    static ClosedForm from_coeff(RationalFunction r) {
        ClosedForm f;
        if (!r.is_zero()) f.terms_.push_back(Term(std::move(r)));
        return f;
    }
    static ClosedForm polygamma_term(RationalFunction c, int order, Rational shift) {
        ClosedForm f;
        Term t(std::move(c));
        t.pg.emplace_back(order, std::move(shift));
        f.terms_.push_back(std::move(t));
        return f;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    ClosedForm operator+(const ClosedForm& o) const {
        std::vector<Term> all = terms_;
        all.insert(all.end(), o.terms_.begin(), o.terms_.end());
        return ClosedForm(std::move(all));
    }
    ClosedForm operator-(const ClosedForm& o) const { return *this + (o * Rational(-1)); }
    ClosedForm operator*(const Rational& s) const {
        ClosedForm f;
        if (s == 0) return f;
        f.terms_ = terms_;
        for (auto& t : f.terms_) t.coeff = t.coeff * s;
        return f;
    }

    /// Exact derivative by the product rule over factors; like terms merged.
    ClosedForm derivative() const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            {  // coefficient derivative
                Term d = t;
                d.coeff = t.coeff.derivative();
                if (!d.coeff.is_zero()) out.push_back(std::move(d));
            }
            for (size_t i = 0; i < t.pg.size(); ++i) {  // psi^{(m)} -> psi^{(m+1)}
                Term d = t;
                d.pg[i] = PolygammaFactor(t.pg[i].order + 1, t.pg[i].shift);
                d.normalize();
                out.push_back(std::move(d));
            }
            for (size_t i = 0; i < t.logs.size(); ++i) {  // ln(x+c) -> 1/(x+c)
                Term d = t;
                d.logs.erase(d.logs.begin() + i);
                d.coeff = t.coeff * RationalFunction::inv_shifted_power(t.logs[i].shift, 1);
                out.push_back(std::move(d));
            }
            if (t.lngamma) {  // lnGamma(x+c) -> psi(x+c)
                Term d = t;
                d.lngamma.reset();
                d.pg.emplace_back(0, t.lngamma->shift);
                d.normalize();
                out.push_back(std::move(d));
            }
        }
        return ClosedForm(std::move(out));
    }

    ClosedForm nth_derivative(int n, int ceiling = 16) const {
        if (n < 0) throw std::domain_error("nth_derivative: negative order");
        if (n > ceiling) throw std::invalid_argument("nth_derivative: order above configured ceiling");
        ClosedForm f = *this;
        for (int i = 0; i < n; ++i) f = f.derivative();
        return f;
    }

    /// Enclosure of the value at exact rational x > 0. The Engine supplies
    /// enclosures for psi^{(n)}, ln and lnGamma at rational arguments.
    template <class Engine>
    ExactInterval eval_exact(const Rational& x, const Engine& engine) const {
        ExactInterval acc{Rational(0)};
        for (const auto& t : terms_) {
            ExactInterval v(t.coeff.eval(x));
            for (const auto& f : t.pg) v *= engine.polygamma_enclosure(f.order, x + f.shift);
            for (const auto& f : t.logs) v *= engine.ln_enclosure(x + f.shift);
            if (t.lngamma) v *= engine.ln_gamma_enclosure(x + t.lngamma->shift);
            acc += v;
            acc = acc.tighten();
        }
        return acc;
    }

    template <class Engine>
    Interval eval(const Interval& x, const Engine& engine) const {
        if (x.lo == x.hi) return eval_exact(rational_of(x.lo), engine).to_interval();
        // generic interval argument: exact-endpoint interval arithmetic per term
        ExactInterval xe(x);
        ExactInterval acc{Rational(0)};
        for (const auto& t : terms_) {
            ExactInterval v = t.coeff.eval(xe);
            for (const auto& f : t.pg)
                v *= ExactInterval::hull(engine.polygamma_enclosure(f.order, xe.lo + f.shift),
                                          engine.polygamma_enclosure(f.order, xe.hi + f.shift));
            for (const auto& f : t.logs)
                v *= ExactInterval::hull(engine.ln_enclosure(xe.lo + f.shift),
                                          engine.ln_enclosure(xe.hi + f.shift));
            if (t.lngamma)
                v *= engine.ln_gamma_range(xe.lo + t.lngamma->shift, xe.hi + t.lngamma->shift);
            acc += v;
            acc = acc.tighten();
        }
        return acc.to_interval();
    }

private:
    std::vector<Term> terms_;

    void merge() {
        std::map<Term::Key, RationalFunction> merged;
        for (auto& t : terms_) {
            t.normalize();
            auto [it, fresh] = merged.try_emplace(t.key(), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        std::vector<Term> out;
        out.reserve(merged.size());
        for (auto& [key, coeff] : merged) {
            if (coeff.is_zero()) continue;
            Term t(std::move(coeff));
            t.pg = std::get<0>(key);
            t.logs = std::get<1>(key);
            t.lngamma = std::get<2>(key);
            out.push_back(std::move(t));
        }
        terms_ = std::move(out);
    }
};

inline ClosedForm operator*(const Rational& s, const ClosedForm& f) { return f * s; }

}  // namespace cmcert
