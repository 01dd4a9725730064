#pragma once

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace cmcert {

inline constexpr unsigned kBernoulliMax = 80;

/// Bernoulli numbers B_0..B_max by the convolution recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1.
inline const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = [] {
        std::vector<Rational> b(kBernoulliMax + 1);
        b[0] = 1;
        for (unsigned m = 1; m <= kBernoulliMax; ++m) {
            Rational acc = 0;
            for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
            b[m] = -acc / Rational(m + 1);
        }
        return b;
    }();
    return table;
}

/// Exact B_m for even m (B_1 is excluded by contract; odd m > 1 rejected).
inline Rational bernoulli(unsigned m) {
    if (m > kBernoulliMax) throw std::domain_error("bernoulli: order above table bound");
    if (m % 2 == 1 && m > 1) throw std::domain_error("bernoulli: odd order > 1 is identically zero");
    return bernoulli_table()[m];
}

}  // namespace cmcert
