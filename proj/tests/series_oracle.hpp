#pragma once

// Slow but independent series oracles used to cross-examine the fast engine:
// psi^(n) from the defining series sum 1/(x+k)^{n+1} with integral tail
// brackets, psi(x) from -gamma + sum (1/(k+1) - 1/(k+x)).

#include <cmcert/interval.hpp>
#include <cmcert/rational.hpp>

namespace cmcert::oracle {

inline Interval euler_gamma() {
    Rational g = parse_rational("0.57721566490153286060651209008240243104215933593992");
    // generous padding: the oracle only needs to contain the tighter engine
    // result, whose digamma width is a few ulps from the libm log enclosure
    Interval v = interval_of(g);
    return Interval(detail::nudge(v.lo, 64, false), detail::nudge(v.hi, 64, true));
}

inline Interval polygamma_series(int n, const Rational& x, int terms = 4000) {
    if (!(x > 0)) throw std::domain_error("polygamma_series: x must be positive");
    if (n == 0) {
        Interval sum(0.0);
        Interval xm1 = interval_of(x - 1);
        for (int k = 0; k < terms; ++k) {
            Interval kp1(static_cast<double>(k + 1));
            sum = sum + xm1 / (kp1 * interval_of(x + k));
        }
        // |tail| <= |x-1| / (terms - 1)
        double bound = std::max(std::fabs(xm1.lo), std::fabs(xm1.hi)) /
                       static_cast<double>(terms - 1);
        return sum + Interval(-bound, bound) - euler_gamma();
    }
    Interval sum(0.0);
    for (int k = 0; k < terms; ++k) sum = sum + Interval(1.0) / pow_int(interval_of(x + k), n + 1);
    // integral bracket: 1/(n (x+K)^n) <= tail <= 1/(n (x+K-1)^n)
    Interval nn(static_cast<double>(n));
    Interval tail = Interval::hull(Interval(1.0) / (nn * pow_int(interval_of(x + terms), n)),
                                   Interval(1.0) / (nn * pow_int(interval_of(x + terms - 1), n)));
    sum = sum + tail;
    Interval fact(1.0);
    for (int i = 2; i <= n; ++i) fact = fact * Interval(static_cast<double>(i));
    Interval v = fact * sum;
    return (n % 2 == 0) ? Interval(0.0) - v : v;
}

}  // namespace cmcert::oracle
