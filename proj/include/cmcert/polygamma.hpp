#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "bernoulli.hpp"
#include "exact_interval.hpp"
#include "interval.hpp"
#include "rational.hpp"

namespace cmcert {

struct EngineConfig {
    Rational shift_cutoff = 20;  // recurrence-shift target; >= 10
    int max_order = 18;
    int series_terms = 30;  // <= 40 (Bernoulli table bound)

    void validate() const {
        if (shift_cutoff < 10) throw std::invalid_argument("EngineConfig: shift_cutoff must be >= 10");
        if (series_terms > 40) throw std::invalid_argument("EngineConfig: series_terms must be <= 40");
    }
};

/// Rigorous enclosures of psi^{(n)}(x) and lnGamma(x) on (0, inf):
/// recurrence shifting above the cutoff (exact rational corrections), then the
/// Bernoulli asymptotic series with the remainder enclosed by +/- the first
/// omitted term. For n >= 1 the series core is a pure rational, so enclosure
/// widths are dominated by the (tiny) remainder, not by rounding.
class PolygammaEngine {
public:
    explicit PolygammaEngine(EngineConfig cfg = {}) : cfg_(cfg) { cfg_.validate(); }

    const EngineConfig& config() const { return cfg_; }

    /// Enclosure of psi^{(n)}(x) at exact rational x > 0.
    ExactInterval polygamma_enclosure(int n, const Rational& x) const {
        if (x <= 0) throw std::domain_error("polygamma: argument must be positive");
        if (n < 0 || n > cfg_.max_order)
            throw std::invalid_argument("polygamma: order above configured ceiling");
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = cache_.find({n, x});
            if (it != cache_.end()) return it->second;
        }
        ExactInterval result = (n == 0) ? digamma_uncached(x) : polygamma_uncached(n, x);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.emplace(std::make_pair(n, x), result);
        return result;
    }

    /// ln(x) at rational x > 0 (libm interval, endpoints inflated).
    ExactInterval ln_enclosure(const Rational& x) const {
        if (x <= 0) throw std::domain_error("ln: argument must be positive");
        return ExactInterval(ln(interval_of(x)));
    }

    /// Enclosure of lnGamma(x) at rational x > 0.
    ExactInterval ln_gamma_enclosure(const Rational& x) const {
        if (x <= 0) throw std::domain_error("ln_gamma: argument must be positive");
        int m = shifts_needed(x);
        Rational y = x + m;
        // lnGamma(x) = lnGamma(y) - ln(prod_{i<m} (x+i)); the product is exact.
        ExactInterval core = ln_gamma_series(y);
        if (m == 0) return core.tighten();
        Rational prod = 1;
        for (int i = 0; i < m; ++i) prod *= (x + i);
        return (core - ln_enclosure(prod)).tighten();
    }

    /// Enclosure of the range of lnGamma over [a, b] (not monotone: the
    /// minimum in (1, 2) is located by bisection on the sign of psi).
    ExactInterval ln_gamma_range(const Rational& a, const Rational& b) const {
        ExactInterval at_a = ln_gamma_enclosure(a), at_b = ln_gamma_enclosure(b);
        ExactInterval hull = ExactInterval::hull(at_a, at_b);
        if (b <= 1 || a >= Rational(3, 2) || a == b) return hull;  // monotone side or point
        if (polygamma_enclosure(0, a).lo >= 0) return hull;        // increasing on [a,b]
        if (polygamma_enclosure(0, b).hi <= 0) return hull;        // decreasing on [a,b]
        // interior minimum: bracket the zero of psi, then bound the dip
        Rational c = std::max(a, Rational(1)), d = std::min(b, Rational(2));
        for (int i = 0; i < 60; ++i) {
            Rational mid = (c + d) / 2;
            ExactInterval s = polygamma_enclosure(0, mid);
            if (s.lo > 0) d = mid;
            else if (s.hi < 0) c = mid;
            else break;
        }
        ExactInterval at_c = ln_gamma_enclosure(c), at_d = ln_gamma_enclosure(d);
        Rational slack = (d - c) * std::max(abs_rat(polygamma_enclosure(0, c).lo),
                                            abs_rat(polygamma_enclosure(0, d).hi));
        Rational dip = std::min(at_c.lo, at_d.lo) - slack;
        return ExactInterval(std::min(hull.lo, dip), hull.hi);
    }

    /// Interval-in, interval-out API (monotone endpoint hull).
    Interval polygamma(int n, const Interval& x) const {
        if (x.lo <= 0) throw std::domain_error("polygamma: argument must be positive");
        ExactInterval a = polygamma_enclosure(n, rational_of(x.lo));
        ExactInterval b = polygamma_enclosure(n, rational_of(x.hi));
        return ExactInterval::hull(a, b).to_interval();
    }

    Interval ln_gamma(const Interval& x) const {
        if (x.lo <= 0) throw std::domain_error("ln_gamma: argument must be positive");
        return ln_gamma_range(rational_of(x.lo), rational_of(x.hi)).to_interval();
    }

    /// Enclosure of S(x) = [psi'(x)]^2 + psi''(x). Below x = 1 the shifted
    /// identity S = (psi'(x+1) + 1/x^2)^2 + psi''(x+1) - 2/x^3 is used, with
    /// the rational parts combined exactly.
    ExactInterval s_combo_exact(const Rational& x) const {
        if (x <= 0) throw std::domain_error("s_combo: argument must be positive");
        if (x < 1) {
            ExactInterval a = polygamma_enclosure(1, x + 1);
            ExactInterval b = polygamma_enclosure(2, x + 1);
            Rational inv2 = Rational(1) / pow_rat(x, 2);
            Rational rest = (Rational(1) - 2 * x) / pow_rat(x, 4);  // 1/x^4 - 2/x^3 exactly
            // (a + c)^2 + b - 2/x^3 with c = 1/x^2; c^2 - 2/x^3 combined exactly
            ExactInterval v = a * a + ExactInterval(2 * inv2) * a + b + ExactInterval(rest);
            return v.tighten();
        }
        ExactInterval p1 = polygamma_enclosure(1, x);
        ExactInterval p2 = polygamma_enclosure(2, x);
        return (p1 * p1 + p2).tighten();
    }

    Interval s_combo(const Interval& x) const {
        ExactInterval a = s_combo_exact(rational_of(x.lo));
        if (x.lo == x.hi) return a.to_interval();
        ExactInterval b = s_combo_exact(rational_of(x.hi));
        return ExactInterval::hull(a, b).to_interval();  // S is decreasing
    }

private:
    EngineConfig cfg_;
    mutable std::map<std::pair<int, Rational>, ExactInterval> cache_;
    mutable std::mutex cache_mutex_;

    int shifts_needed(const Rational& x) const {
        if (x >= cfg_.shift_cutoff) return 0;
        Rational gap = cfg_.shift_cutoff - x;
        BigInt g = numerator(gap) / denominator(gap);
        int m = g.convert_to<int>();
        if (x + m < cfg_.shift_cutoff) ++m;
        return m;
    }

    /// psi^{(n)}(x), n >= 1: shift to y = x + m >= cutoff, then
    /// (-1)^{n+1} [ (n-1)!/y^n + n!/(2 y^{n+1})
    ///              + sum_k B_{2k} (2k+n-1)!/(2k)! y^{-(2k+n)} ] + corrections.
    // Series terms are rounded outward to 320-bit dyadics as they are
    // accumulated; this keeps every operand small (no gcd churn on huge
    // rationals) while the added slack, ~2^-300 relative, stays far below the
    // first-omitted-term remainder bookkeeping.
    static constexpr int kAccBits = 320;

    ExactInterval polygamma_uncached(int n, const Rational& x) const {
        int m = shifts_needed(x);
        Rational y = x + m;
        // psi^{(n)}(x) = psi^{(n)}(y) + (-1)^{n+1} n! sum 1/(x+i)^{n+1}
        ExactInterval corr{Rational(0)};
        for (int i = 0; i < m; ++i)
            corr = (corr + ExactInterval(Rational(1) / pow_rat(x + i, n + 1))).tighten(kAccBits);
        corr = corr * ExactInterval(Rational(factorial(n)));

        const auto& B = bernoulli_table();
        Rational inv_y = Rational(1) / y;
        ExactInterval core =
            ExactInterval(Rational(factorial(n - 1)) * pow_rat(inv_y, n) +
                          Rational(factorial(n)) / 2 * pow_rat(inv_y, n + 1))
                .tighten(kAccBits);
        ExactInterval inv2 = ExactInterval(inv_y * inv_y).tighten(kAccBits);
        ExactInterval power = ExactInterval(pow_rat(inv_y, n + 2)).tighten(kAccBits);
        Rational coef = Rational(factorial(n + 1)) / 2;  // (2k+n-1)!/(2k)! at k=1
        Rational term_prev = 0, remainder = 0;
        int kmax = std::min(cfg_.series_terms, 39);
        for (int k = 1; k <= kmax + 1; ++k) {
            ExactInterval term = power * ExactInterval(B[2 * k] * coef);
            Rational mag = std::max(abs_rat(term.lo), abs_rat(term.hi));
            if ((k > 1 && mag >= term_prev) || k == kmax + 1) {
                remainder = mag;  // first omitted (or first growing) term
                break;
            }
            core = (core + term).tighten(kAccBits);
            term_prev = mag;
            power = (power * inv2).tighten(kAccBits);
            coef *= Rational((2 * k + n) * (2 * k + n + 1)) / Rational((2 * k + 1) * (2 * k + 2));
        }
        ExactInterval series = core + ExactInterval::centered(0, remainder);
        int sign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
        ExactInterval result = (series + corr) * ExactInterval(Rational(sign));
        return result.tighten(256);
    }

    /// psi(x): shift, then ln y - 1/(2y) - sum_k B_{2k}/(2k y^{2k}).
    ExactInterval digamma_uncached(const Rational& x) const {
        int m = shifts_needed(x);
        Rational y = x + m;
        // psi(x) = psi(y) - sum 1/(x+i)
        ExactInterval corr{Rational(0)};
        for (int i = 0; i < m; ++i)
            corr = (corr + ExactInterval(Rational(1) / (x + i))).tighten(kAccBits);

        const auto& B = bernoulli_table();
        Rational inv_y = Rational(1) / y;
        ExactInterval core = ExactInterval(-inv_y / 2).tighten(kAccBits);
        ExactInterval inv2 = ExactInterval(inv_y * inv_y).tighten(kAccBits);
        ExactInterval power = inv2;
        Rational term_prev = 0, remainder = 0;
        int kmax = std::min(cfg_.series_terms, 39);
        for (int k = 1; k <= kmax + 1; ++k) {
            ExactInterval term = power * ExactInterval(-B[2 * k] / Rational(2 * k));
            Rational mag = std::max(abs_rat(term.lo), abs_rat(term.hi));
            if ((k > 1 && mag >= term_prev) || k == kmax + 1) {
                remainder = mag;
                break;
            }
            core = (core + term).tighten(kAccBits);
            term_prev = mag;
            power = (power * inv2).tighten(kAccBits);
        }
        ExactInterval result =
            ln_enclosure(y) + core + ExactInterval::centered(0, remainder) - corr;
        return result.tighten(256);
    }

    /// Stirling series at y >= cutoff:
    /// (y - 1/2) ln y - y + ln(2 pi)/2 + sum_k B_{2k}/((2k)(2k-1) y^{2k-1}).
    ExactInterval ln_gamma_series(const Rational& y) const {
        const auto& B = bernoulli_table();
        Rational inv_y = Rational(1) / y;
        ExactInterval core{Rational(0)};
        ExactInterval inv2 = ExactInterval(inv_y * inv_y).tighten(kAccBits);
        ExactInterval power = ExactInterval(inv_y).tighten(kAccBits);
        Rational term_prev = 0, remainder = 0;
        int kmax = std::min(cfg_.series_terms, 39);
        for (int k = 1; k <= kmax + 1; ++k) {
            ExactInterval term = power * ExactInterval(B[2 * k] / Rational((2 * k) * (2 * k - 1)));
            Rational mag = std::max(abs_rat(term.lo), abs_rat(term.hi));
            if ((k > 1 && mag >= term_prev) || k == kmax + 1) {
                remainder = mag;
                break;
            }
            core = (core + term).tighten(kAccBits);
            term_prev = mag;
            power = (power * inv2).tighten(kAccBits);
        }
        ExactInterval ln_y = ln_enclosure(y);
        ExactInterval result = ExactInterval(y - Rational(1, 2)) * ln_y - ExactInterval(y) +
                               half_ln_two_pi() + core + ExactInterval::centered(0, remainder);
        return result;
    }

    static ExactInterval half_ln_two_pi() {
        // M_PI rounds pi toward zero, so [M_PI, nextafter(M_PI)] encloses pi.
        static const ExactInterval value = [] {
            Interval pi(M_PI, std::nextafter(M_PI, 4.0));
            return ExactInterval(ln(Interval(2.0) * pi) * Interval(0.5));
        }();
        return value;
    }
};

}  // namespace cmcert
