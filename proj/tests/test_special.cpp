#include <doctest.h>

#include <cmcert/polygamma.hpp>

#include "series_oracle.hpp"

using namespace cmcert;

namespace {

PolygammaEngine& engine() {
    static PolygammaEngine e;
    return e;
}

// Frozen reference digits (40 significant figures); true value within 1e-36
// of the parsed decimal, so a narrow enclosure must sit inside that band.
bool matches(const ExactInterval& v, const std::string& digits, double band = 1e-30) {
    Rational q = parse_rational(digits);
    Rational eps = rational_of(band);
    return v.lo >= q - eps && v.hi <= q + eps && v.width() < eps;
}

}  // namespace

TEST_CASE("digamma and polygamma reference values at 1") {
    // digamma routes through a libm log enclosure, so its width is a few ulps
    CHECK(matches(engine().polygamma_enclosure(0, 1),
                  "-0.5772156649015328606065120900824024310422", 1e-12));
    CHECK(matches(engine().polygamma_enclosure(1, 1),
                  "1.644934066848226436472415166646025189219"));
    CHECK(matches(engine().polygamma_enclosure(2, 1),
                  "-2.40411380631918857079947632302289998153"));
}

TEST_CASE("log gamma reference value at 1/2") {
    CHECK(matches(engine().ln_gamma_enclosure(Rational(1, 2)),
                  "0.5723649429247000870717136756765293558236", 1e-12));
    // lnGamma(1) = lnGamma(2) = 0 exactly up to enclosure width
    ExactInterval one = engine().ln_gamma_enclosure(1);
    CHECK(one.contains(Rational(0)));
    CHECK(abs_rat(one.width()) < rational_of(1e-13));
}

TEST_CASE("recurrence residual contains the exact jump") {
    for (int n = 0; n <= 5; ++n) {
        for (const Rational& x : {Rational(1, 2), Rational(3), Rational(25, 7)}) {
            ExactInterval diff =
                engine().polygamma_enclosure(n, x + 1) - engine().polygamma_enclosure(n, x);
            Rational jump = Rational((n % 2 == 0) ? 1 : -1) * Rational(factorial(n)) /
                            pow_rat(x, n + 1);
            CHECK(diff.contains(jump));
        }
    }
}

TEST_CASE("independent series oracle contains the engine enclosure") {
    for (int n = 0; n <= 4; ++n) {
        for (const Rational& x : {Rational(1, 4), Rational(1), Rational(3), Rational(17, 2)}) {
            ExactInterval eng = engine().polygamma_enclosure(n, x);
            Interval ora = oracle::polygamma_series(n, x);
            CHECK(Rational(rational_of(ora.lo)) <= eng.lo);
            CHECK(eng.hi <= Rational(rational_of(ora.hi)));
        }
    }
}

TEST_CASE("enclosure widths stay far below double precision") {
    for (int n = 0; n <= 6; ++n) {
        ExactInterval v = engine().polygamma_enclosure(n, Rational(7, 3));
        Rational scale = std::max(abs_rat(v.lo), abs_rat(v.hi));
        CHECK(v.width() <= scale * rational_of(1e-12));
    }
}

TEST_CASE("cancellation-safe combo matches reference values") {
    CHECK(matches(engine().s_combo_exact(Rational(1)),
                  "0.3016942779586569079905329183300197754069"));
    CHECK(matches(engine().s_combo_exact(Rational(2)),
                  "0.01182614426220403504570258503796939697"));
    CHECK(matches(engine().s_combo_exact(Rational(1, 2)),
                  "7.523476114266289313513748911015977941722"));
    // both routes agree across the shifted-identity boundary at x = 1
    ExactInterval direct = engine().polygamma_enclosure(1, Rational(9, 10));
    ExactInterval sc = engine().s_combo_exact(Rational(9, 10));
    ExactInterval recomposed = direct * direct + engine().polygamma_enclosure(2, Rational(9, 10));
    CHECK(sc.lo <= recomposed.hi);
    CHECK(recomposed.lo <= sc.hi);
}

TEST_CASE("log gamma range covers the interior dip") {
    // Gamma has its minimum near x = 1.4616; the hull of the endpoint values
    // alone would miss it on [1, 2].
    ExactInterval r = engine().ln_gamma_range(Rational(1), Rational(2));
    CHECK(r.lo < rational_of(-0.12));
    CHECK(r.contains(Rational(0)));
}

TEST_CASE("euler gamma oracle digits") {
    Interval g = oracle::euler_gamma();
    CHECK(g.contains(0.5772156649015328606));
    CHECK(g.hi - g.lo < 1e-13);
}
