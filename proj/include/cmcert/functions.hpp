#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "closed_form.hpp"
#include "exppoly.hpp"
#include "interval.hpp"
#include "polygamma.hpp"
#include "rational_function.hpp"

namespace cmcert {

namespace detail {
inline Polynomial poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    v.reserve(cs.size());
    for (long c : cs) v.emplace_back(c);
    return Polynomial(std::move(v));
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Rational bound families
// ---------------------------------------------------------------------------

/// B_lambda(x) = (x^2 + lambda x + 12) / (12 x^4 (x+1)^2)
inline RationalFunction bound_rational(const Rational& lambda) {
    Polynomial num({Rational(12), lambda, Rational(1)});
    Polynomial x4 = Polynomial::x() * Polynomial::x() * Polynomial::x() * Polynomial::x();
    Polynomial xp1 = detail::poly({1, 1});
    return RationalFunction(num, Rational(12) * (x4 * xp1 * xp1));
}

/// h(x) = 1 / (12 x^3 (x+1)^2), the decomposition kernel B_lambda = B_0 + lambda h.
inline RationalFunction h_rational() {
    Polynomial x3 = Polynomial::x() * Polynomial::x() * Polynomial::x();
    Polynomial xp1 = detail::poly({1, 1});
    return RationalFunction(Polynomial::constant(1), Rational(12) * (x3 * xp1 * xp1));
}

enum class ClassicBound { P900Lower, WeakUpper, TwoSidedLower, TwoSidedUpper };

/// Exact decomposition: B_lambda - B_0 = lambda h  and  B_lambda - U = (lambda-13) h.
inline bool decomposition_identities(const Rational& lambda);

inline RationalFunction classic_bound(ClassicBound name) {
    Polynomial x = Polynomial::x();
    Polynomial x4 = x * x * x * x;
    Polynomial xp1 = detail::poly({1, 1});
    switch (name) {
        case ClassicBound::P900Lower: {
            Polynomial p = detail::poly({450, 3600, 13290, 29700, 44101, 45050, 31865, 15370,
                                         4840, 900, 75});
            Polynomial den = x4;
            for (int i = 0; i < 10; ++i) den = den * xp1;
            return RationalFunction(p, Rational(900) * den);
        }
        case ClassicBound::WeakUpper: {
            Polynomial p = detail::poly({36, 180, 408, 504, 352, 132, 21});
            Polynomial den = x4;
            for (int i = 0; i < 6; ++i) den = den * xp1;
            return RationalFunction(p, Rational(36) * den);
        }
        case ClassicBound::TwoSidedLower:
            return bound_rational(0);
        case ClassicBound::TwoSidedUpper:
            return RationalFunction(detail::poly({12, 1}), Rational(12) * (x4 * xp1));
    }
    throw std::invalid_argument("classic_bound: unknown name");
}

inline bool decomposition_identities(const Rational& lambda) {
    RationalFunction b = bound_rational(lambda);
    RationalFunction h = h_rational();
    return b - bound_rational(0) == lambda * h &&
           b - classic_bound(ClassicBound::TwoSidedUpper) == (lambda - 13) * h;
}

// ---------------------------------------------------------------------------
// f_lambda and h_lambda as closed forms
// ---------------------------------------------------------------------------

enum class FLambdaForm { Direct, Shifted };

/// f_lambda(x) = [psi'(x)]^2 + psi''(x) - B_lambda(x).
/// The shifted form rewrites everything through psi'(x+1), psi''(x+1) with the
/// rational parts combined exactly; it is the cancellation-safe route near 0.
inline ClosedForm f_lambda(const Rational& lambda, FLambdaForm form) {
    if (form == FLambdaForm::Direct) {
        std::vector<Term> terms;
        terms.emplace_back(RationalFunction(Rational(1)),
                           std::vector<PolygammaFactor>{{1, 0}, {1, 0}});
        terms.emplace_back(RationalFunction(Rational(1)), std::vector<PolygammaFactor>{{2, 0}});
        terms.emplace_back(-bound_rational(lambda));
        return ClosedForm(std::move(terms));
    }
    // -(lambda/12)[1/x^3 - 2/x^2 + 3/x - (4+3x)/(1+x)^2]
    //   - 37/(12 x^2) + 25/(6 x) - (63+50x)/(12 (1+x)^2)
    //   + (2/x^2) psi'(x+1) + [psi'(x+1)]^2 + psi''(x+1)
    Polynomial xp1 = detail::poly({1, 1});
    RationalFunction lam_bracket =
        RationalFunction::inv_shifted_power(0, 3) -
        Rational(2) * RationalFunction::inv_shifted_power(0, 2) +
        Rational(3) * RationalFunction::inv_shifted_power(0, 1) -
        RationalFunction(detail::poly({4, 3}), xp1 * xp1);
    RationalFunction rat = lam_bracket * (-lambda / 12) -
                           RationalFunction(Polynomial::constant(Rational(37, 12)),
                                            Polynomial::x() * Polynomial::x()) +
                           RationalFunction(Polynomial::constant(Rational(25, 6)), Polynomial::x()) -
                           RationalFunction(detail::poly({63, 50}), Rational(12) * (xp1 * xp1));
    std::vector<Term> terms;
    terms.emplace_back(rat);
    terms.emplace_back(Rational(2) * RationalFunction::inv_shifted_power(0, 2),
                       std::vector<PolygammaFactor>{{1, 1}});
    terms.emplace_back(RationalFunction(Rational(1)), std::vector<PolygammaFactor>{{1, 1}, {1, 1}});
    terms.emplace_back(RationalFunction(Rational(1)), std::vector<PolygammaFactor>{{2, 1}});
    return ClosedForm(std::move(terms));
}

/// h_lambda(x) = psi'(x) - 1/x^2 - lambda/(24x) + (37-2l)/(6(x+2))
///   + (9l-172)/(24(x+1)) + (28-l)/(8(x+1)^2) + (13-l)/(6(x+2)^2)
///   + (l-48)/(24(x+1)^3) + 1/(2(x+1)^4)
inline ClosedForm h_lambda(const Rational& l) {
    RationalFunction rat =
        -RationalFunction::inv_shifted_power(0, 2) -
        (l / 24) * RationalFunction::inv_shifted_power(0, 1) +
        (Rational(37) - 2 * l) / 6 * RationalFunction::inv_shifted_power(2, 1) +
        (9 * l - 172) / 24 * RationalFunction::inv_shifted_power(1, 1) +
        (Rational(28) - l) / 8 * RationalFunction::inv_shifted_power(1, 2) +
        (Rational(13) - l) / 6 * RationalFunction::inv_shifted_power(2, 2) +
        (l - 48) / 24 * RationalFunction::inv_shifted_power(1, 3) +
        Rational(1, 2) * RationalFunction::inv_shifted_power(1, 4);
    std::vector<Term> terms;
    terms.emplace_back(RationalFunction(Rational(1)), std::vector<PolygammaFactor>{{1, 0}});
    terms.emplace_back(rat);
    return ClosedForm(std::move(terms));
}

// ---------------------------------------------------------------------------
// Kernel objects: Q, P's numerator, and the theta chain
// ---------------------------------------------------------------------------

/// Q(t) = 2 e^{2t} - e^t (t^2 - 6t + 18) + 8(t + 2)
inline ExpPoly kernel_q() {
    return ExpPoly::term(2, detail::poly({2})) + ExpPoly::term(1, detail::poly({-18, 6, -1})) +
           ExpPoly::term(0, detail::poly({16, 8}));
}

/// P(t) * (e^t - 1) = e^{2t}(t^3-12t^2+54t-86) - e^t(t^3-12t^2+16t-160) - 26t - 74
inline ExpPoly kernel_p_numerator() {
    return ExpPoly::term(2, detail::poly({-86, 54, -12, 1})) +
           ExpPoly::term(1, detail::poly({160, -16, 12, -1})) +
           ExpPoly::term(0, detail::poly({-74, -26}));
}

/// u(t) = 883 - 1932 t + 252 t^2 + 720 t^3 (the Descartes step)
inline Polynomial u_polynomial() { return detail::poly({883, -1932, 252, 720}); }

struct ThetaEntry {
    enum class Link { None, Derivative, Factorization };

    std::string name;
    int exp_prefactor;  // value represented = e^{exp_prefactor * t} * poly
    ExpPoly poly;
    Link link = Link::None;
    Rational factor_scale = 1;  // factorization: prev == scale * e^t * this
    std::optional<Rational> tabulated_value_at_zero;

    ExpPoly plain() const { return poly.exp_shift(exp_prefactor); }
    Rational value_at_zero() const { return plain().taylor_coeff(0); }
};

/// The derivative chain theta, theta', theta_1 ... theta_3^{(4)}, with the
/// factorization prefactors recorded explicitly (theta' = 2 e^t theta_1,
/// theta_1^{(5)} = e^t theta_2, theta_2^{(5)} = 16 e^t theta_3).
inline std::vector<ThetaEntry> theta_chain() {
    using detail::poly;
    using L = ThetaEntry::Link;
    auto ep = [](int j, Polynomial p) { return ExpPoly::term(j, std::move(p)); };

    ExpPoly theta = Rational(2) * ep(5, poly({-140, 78, -15, 1})) +
                    ep(4, poly({1236, -420, 132, -16, 1})) -
                    Rational(2) * ep(3, poly({1018, -132, 125, -26, 5})) +
                    ep(2, poly({1660, -228, 356, -88, 17})) -
                    ep(1, poly({756, -228, 40, -38, 8})) + ep(0, poly({176}));

    ExpPoly theta1 = ep(4, poly({-622, 360, -72, 5})) +
                     Rational(2) * ep(3, poly({1131, -354, 120, -15, 1})) -
                     ep(2, poly({2922, -146, 297, -58, 15})) +
                     ep(1, poly({1546, 128, 224, -54, 17})) + ep(0, poly({-264, 74, 37, 3, -4}));

    ExpPoly theta1_d1 = ep(4, poly({-2128, 1296, -273, 20})) +
                        Rational(2) * ep(3, poly({3039, -822, 315, -41, 3})) -
                        Rational(2) * ep(2, poly({2849, 151, 210, -28, 15})) +
                        ep(1, poly({1674, 576, 62, 14, 17})) + ep(0, poly({74, 74, 9, -16}));

    ExpPoly theta1_d2 = Rational(2) * ep(4, poly({-3608, 2319, -516, 40})) +
                        Rational(6) * ep(3, poly({2765, -612, 274, -37, 3})) -
                        Rational(2) * ep(2, poly({5849, 722, 336, 4, 30})) +
                        ep(1, poly({2250, 700, 104, 82, 17})) + ep(0, poly({74, 18, -48}));

    ExpPoly theta1_d3 = Rational(2) * ep(4, poly({-12113, 8244, -1944, 160})) +
                        Rational(6) * ep(3, poly({7683, -1288, 711, -99, 9})) -
                        Rational(8) * ep(2, poly({3105, 529, 171, 32, 15})) +
                        ep(1, poly({2950, 908, 350, 150, 17})) + ep(0, poly({18, -96}));

    ExpPoly theta1_d4 = Rational(32) * ep(4, poly({-2513, 1818, -456, 40})) +
                        Rational(6) * ep(3, poly({21761, -2442, 1836, -261, 27})) -
                        Rational(8) * ep(2, poly({6739, 1400, 438, 124, 30})) +
                        ep(1, poly({3858, 1608, 800, 218, 17})) + ep(0, poly({-96}));

    ExpPoly theta2 = Rational(64) * ep(3, poly({-4117, 3180, -852, 80})) +
                     Rational(18) * ep(2, poly({20947, -1218, 1575, -225, 27})) -
                     Rational(16) * ep(1, poly({7439, 1838, 624, 184, 30})) +
                     ep(0, poly({5466, 3208, 1454, 286, 17}));

    ExpPoly theta2_d1 =
        Rational(2) * (Rational(96) * ep(3, poly({-3057, 2612, -772, 80})) +
                       Rational(9) * ep(2, poly({40676, 714, 2475, -342, 54})) -
                       Rational(8) * ep(1, poly({9277, 3086, 1176, 304, 30})) +
                       ep(0, poly({1604, 1454, 429, 34})));

    ExpPoly theta2_d2 =
        Rational(4) * (Rational(48) * ep(3, poly({-6559, 6292, -2076, 240})) +
                       Rational(9) * ep(2, poly({41033, 3189, 1962, -234, 54})) -
                       Rational(4) * ep(1, poly({12363, 5438, 2088, 424, 30})) +
                       ep(0, poly({727, 429, 51})));

    ExpPoly theta2_d3 =
        Rational(4) * (Rational(48) * ep(3, poly({-13385, 14724, -5508, 720})) +
                       Rational(9) * ep(2, poly({85255, 10302, 3222, -252, 108})) -
                       Rational(4) * ep(1, poly({17801, 9614, 3360, 544, 30})) +
                       ep(0, poly({429, 102})));

    ExpPoly theta2_d4 =
        Rational(8) * (Rational(72) * ep(3, poly({-8477, 11052, -4788, 720})) +
                       Rational(18) * ep(2, poly({45203, 6762, 1422, -18, 54})) -
                       Rational(2) * ep(1, poly({27415, 16334, 4992, 664, 30})) +
                       ep(0, poly({51})));

    ExpPoly theta3 = Rational(108) * ep(2, poly({-4793, 7860, -4068, 720})) +
                     Rational(18) * ep(1, poly({48584, 8184, 1395, 90, 54})) +
                     ep(0, poly({-43749, -26318, -6984, -784, -30}));

    ExpPoly theta3_d1 =
        Rational(2) * (Rational(108) * ep(2, poly({-863, 3792, -2988, 720})) +
                       Rational(9) * ep(1, poly({56768, 10974, 1665, 306, 54})) +
                       ep(0, poly({-13159, -6984, -1176, -60})));

    ExpPoly theta3_d2 =
        Rational(6) * (Rational(72) * ep(2, poly({1033, 804, -1908, 720})) +
                       Rational(3) * ep(1, poly({67742, 14304, 2583, 522, 54})) -
                       Rational(4) * ep(0, poly({582, 196, 15})));

    ExpPoly theta3_d3 =
        Rational(6) * (Rational(144) * ep(2, poly({1435, -1104, -828, 720})) +
                       Rational(3) * ep(1, poly({82046, 19470, 4149, 738, 54})) -
                       Rational(8) * ep(0, poly({98, 15})));

    ExpPoly theta3_d4 =
        Rational(18) * (Rational(96) * ep(2, poly({883, -1932, 252, 720})) +
                        ep(1, poly({101516, 27768, 6363, 954, 54})) + ep(0, poly({-40})));

    std::vector<ThetaEntry> chain;
    auto add = [&](std::string name, int j0, ExpPoly p, L link, Rational scale,
                   std::optional<Rational> v0) {
        chain.push_back({std::move(name), j0, std::move(p), link, std::move(scale), std::move(v0)});
    };
    add("theta", 0, theta, L::None, 1, Rational(0));
    add("theta'", 1, Rational(2) * theta1, L::Derivative, 1, Rational(0));
    add("theta1", 0, theta1, L::Factorization, 2, std::nullopt);
    add("theta1'", 0, theta1_d1, L::Derivative, 1, Rational(0));
    add("theta1''", 0, theta1_d2, L::Derivative, 1, Rational(0));
    add("theta1'''", 0, theta1_d3, L::Derivative, 1, Rational(0));
    add("theta1''''", 0, theta1_d4, L::Derivative, 1, Rational(0));
    add("theta1'''''", 1, theta2, L::Derivative, 1, Rational(0));
    add("theta2", 0, theta2, L::Factorization, 1, Rational(0));
    add("theta2'", 0, theta2_d1, L::Derivative, 1, Rational(0));
    add("theta2''", 0, theta2_d2, L::Derivative, 1, Rational(22960));
    add("theta2'''", 0, theta2_d3, L::Derivative, 1, Rational(216160));
    add("theta2''''", 0, theta2_d4, L::Derivative, 1, Rational(1188248));
    add("theta2'''''", 1, Rational(16) * theta3, L::Derivative, 1, Rational(5009904));
    add("theta3", 0, theta3, L::Factorization, 16, Rational(313119));
    add("theta3'", 0, theta3_d1, L::Derivative, 1, Rational(809098));
    add("theta3''", 0, theta3_d2, L::Derivative, 1, Rational(1651644));
    add("theta3'''", 0, theta3_d3, L::Derivative, 1, Rational(2711964));
    add("theta3''''", 0, theta3_d4, L::Derivative, 1, Rational(3352392));
    return chain;
}

/// Tabulated positivity floors: theta_2'' > 22960, ..., theta_3^{(4)} > 3352392.
/// Entries without a listed floor (the identically-vanishing initial values)
/// carry floor 0.
inline Rational theta_floor(const ThetaEntry& e) {
    return e.tabulated_value_at_zero.value_or(Rational(0));
}

struct KernelSet {
    ExpPoly q;
    ExpPoly p_numerator;  // P(t) * (e^t - 1)
    std::vector<ThetaEntry> chain;
};

inline KernelSet build_kernel() {
    return {kernel_q(), kernel_p_numerator(), theta_chain()};
}

// ---------------------------------------------------------------------------
// Section 3 families
// ---------------------------------------------------------------------------

/// psi'(x) - lambda (4+8x+5x^2)/(24 x (1+x)^3 (2+x)^2)
///   - (24+120x+283x^2+399x^3+345x^4+181x^5+51x^6+6x^7)/(6 x^2 (1+x)^4 (2+x)^2)
inline ClosedForm psi1_bound(const Rational& lambda) {
    using detail::poly;
    Polynomial x = Polynomial::x(), xp1 = poly({1, 1}), xp2 = poly({2, 1});
    RationalFunction lam_term(lambda * poly({4, 8, 5}),
                              Rational(24) * (x * xp1 * xp1 * xp1 * xp2 * xp2));
    RationalFunction big(poly({24, 120, 283, 399, 345, 181, 51, 6}),
                         Rational(6) * (x * x * xp1 * xp1 * xp1 * xp1 * xp2 * xp2));
    std::vector<Term> terms;
    terms.emplace_back(RationalFunction(Rational(1)), std::vector<PolygammaFactor>{{1, 0}});
    terms.emplace_back(-lam_term);
    terms.emplace_back(-big);
    return ClosedForm(std::move(terms));
}

/// middle = psi(x) - (28x^4+87x^3+73x^2+3x-12)/(6x(x+1)^3(x+2))
///          - [43 ln(x+1) - 37 ln(x+2)]/6
/// bracket = [ln x - 9 ln(1+x) + 8 ln(2+x)]/24 - (18+33x+14x^2)/(48(1+x)^2(2+x))
inline std::pair<ClosedForm, ClosedForm> psi_bound_middle_and_bracket() {
    using detail::poly;
    Polynomial x = Polynomial::x(), xp1 = poly({1, 1}), xp2 = poly({2, 1});
    std::vector<Term> mid;
    {
        Term psi_term{RationalFunction(Rational(1))};
        psi_term.pg.emplace_back(0, 0);
        mid.push_back(std::move(psi_term));
        mid.emplace_back(-RationalFunction(poly({-12, 3, 73, 87, 28}),
                                           Rational(6) * (x * xp1 * xp1 * xp1 * xp2)));
        Term l1{RationalFunction(Rational(-43, 6))};
        l1.logs.emplace_back(Rational(1));
        mid.push_back(std::move(l1));
        Term l2{RationalFunction(Rational(37, 6))};
        l2.logs.emplace_back(Rational(2));
        mid.push_back(std::move(l2));
    }
    std::vector<Term> br;
    {
        Term l0{RationalFunction(Rational(1, 24))};
        l0.logs.emplace_back(Rational(0));
        br.push_back(std::move(l0));
        Term l1{RationalFunction(Rational(-9, 24))};
        l1.logs.emplace_back(Rational(1));
        br.push_back(std::move(l1));
        Term l2{RationalFunction(Rational(8, 24))};
        l2.logs.emplace_back(Rational(2));
        br.push_back(std::move(l2));
        br.emplace_back(-RationalFunction(poly({18, 33, 14}),
                                          Rational(48) * (xp1 * xp1 * xp2)));
    }
    return {ClosedForm(std::move(mid)), ClosedForm(std::move(br))};
}

/// G_lambda(x) = lnGamma(x) + x + 1/(12(1+x)^2) + (lambda-48)/(48(1+x)) + H_lambda(x)/24,
/// H_lambda(x) = (24 - lambda x) ln x + [(9l-172)x + 12l - 256] ln(x+1)
///             + 4[(37-2l)x - 3l + 61] ln(x+2).
///
/// rearranged=true combines lnGamma(x) + ln x into lnGamma(x+1), which keeps
/// evaluation (and derivatives) well-conditioned near x = 0.
inline ClosedForm g_lambda(const Rational& l, bool rearranged = true) {
    using detail::poly;
    Polynomial xp1 = poly({1, 1});
    std::vector<Term> terms;
    if (rearranged) {
        Term lg{RationalFunction(Rational(1))};
        lg.lngamma = LnGammaFactor(Rational(1));
        terms.push_back(std::move(lg));
        // remaining ln x weight: (24 - lambda x)/24 - 1 = -lambda x / 24
        if (l != 0) {
            Term lx{RationalFunction::from_poly(Polynomial({Rational(0), -l / 24}))};
            lx.logs.emplace_back(Rational(0));
            terms.push_back(std::move(lx));
        }
    } else {
        Term lg{RationalFunction(Rational(1))};
        lg.lngamma = LnGammaFactor(Rational(0));
        terms.push_back(std::move(lg));
        Term lx{RationalFunction::from_poly(Polynomial({Rational(1), -l / 24}))};
        lx.logs.emplace_back(Rational(0));
        terms.push_back(std::move(lx));
    }
    terms.emplace_back(RationalFunction::x());
    terms.emplace_back(Rational(1, 12) * RationalFunction(Polynomial::constant(1), xp1 * xp1));
    terms.emplace_back((l - 48) / 48 * RationalFunction(Polynomial::constant(1), xp1));
    {
        Term l1{RationalFunction::from_poly(
            Polynomial({(12 * l - 256) / 24, (9 * l - 172) / 24}))};
        l1.logs.emplace_back(Rational(1));
        terms.push_back(std::move(l1));
        Term l2{RationalFunction::from_poly(
            Polynomial({(Rational(244) - 12 * l) / 24, (Rational(148) - 8 * l) / 24}))};
        l2.logs.emplace_back(Rational(2));
        terms.push_back(std::move(l2));
    }
    return ClosedForm(std::move(terms));
}

/// Explicit G_0 and G_4 forms (lnGamma(x)+ln x combined).
inline ClosedForm g_explicit(int lambda) {
    using detail::poly;
    Polynomial xp1 = poly({1, 1});
    std::vector<Term> terms;
    Term lg{RationalFunction(Rational(1))};
    lg.lngamma = LnGammaFactor(Rational(1));
    terms.push_back(std::move(lg));
    terms.emplace_back(RationalFunction::x());
    terms.emplace_back(Rational(1, 12) * RationalFunction(Polynomial::constant(1), xp1 * xp1));
    if (lambda == 0) {
        terms.emplace_back(-RationalFunction(Polynomial::constant(1), xp1));
        Term l2{RationalFunction::from_poly(Polynomial({Rational(61, 6), Rational(37, 6)}))};
        l2.logs.emplace_back(Rational(2));
        terms.push_back(std::move(l2));
        Term l1{RationalFunction::from_poly(Polynomial({Rational(-64, 6), Rational(-43, 6)}))};
        l1.logs.emplace_back(Rational(1));
        terms.push_back(std::move(l1));
    } else if (lambda == 4) {
        terms.emplace_back(Rational(-11, 12) * RationalFunction(Polynomial::constant(1), xp1));
        Term l2{RationalFunction::from_poly(Polynomial({Rational(49, 6), Rational(29, 6)}))};
        l2.logs.emplace_back(Rational(2));
        terms.push_back(std::move(l2));
        Term l1{RationalFunction::from_poly(Polynomial({Rational(-52, 6), Rational(-34, 6)}))};
        l1.logs.emplace_back(Rational(1));
        terms.push_back(std::move(l1));
        Term lx{RationalFunction::from_poly(Polynomial({Rational(0), Rational(-1, 6)}))};
        lx.logs.emplace_back(Rational(0));
        terms.push_back(std::move(lx));
    } else {
        throw std::invalid_argument("g_explicit: only lambda = 0 and 4 are available");
    }
    return ClosedForm(std::move(terms));
}

/// Closed-form limits of G_lambda at 0+ and infinity.
inline std::pair<Interval, Interval> g_limits(const Rational& l) {
    Interval ln2 = ln(Interval(2.0));
    Interval pi(M_PI, std::nextafter(M_PI, 4.0));
    Interval ln2pi = ln(Interval(2.0) * pi);
    Interval lam = interval_of(l);
    Interval at_zero =
        (Interval(488.0) * ln2 - Interval(44.0) + lam * (Interval(1.0) - Interval(24.0) * ln2)) /
        Interval(48.0);
    Interval at_inf =
        (Interval(124.0) + Interval(12.0) * ln2pi - Interval(7.0) * lam) / Interval(24.0);
    return {at_zero, at_inf};
}

/// Conjectured bound side: x -> (1/x^4) [(x^2+4x+12)/(12(x+1)^2)]^exponent.
struct ConjectureSide {
    Rational exponent;

    explicit ConjectureSide(Rational e) : exponent(std::move(e)) {
        if (exponent <= 0) throw std::domain_error("ConjectureSide: exponent must be positive");
    }

    Interval eval(const Rational& x) const {
        if (x <= 0) throw std::domain_error("ConjectureSide: x must be positive");
        Rational base = (x * x + 4 * x + 12) / (12 * (x + 1) * (x + 1));
        Interval b = interval_of(base);
        if (b.lo <= 0) throw std::domain_error("ConjectureSide: base enclosure touches 0");
        Interval p = pow_real(b, interval_of(exponent));
        return p * interval_of(Rational(1) / pow_rat(x, 4));
    }
};

}  // namespace cmcert
