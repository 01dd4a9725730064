#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmcert/bernoulli.hpp>
#include <cmcert/exact_interval.hpp>
#include <cmcert/exppoly.hpp>
#include <cmcert/grid.hpp>
#include <cmcert/interval.hpp>
#include <cmcert/polynomial.hpp>
#include <cmcert/rational.hpp>
#include <cmcert/rational_function.hpp>

using namespace cmcert;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5e-3") == Rational(-3, 2000));
    CHECK(parse_rational("1e4") == Rational(10000));
    CHECK(parse_rational("42") == Rational(42));
    // leading zeros in the digit string must not trip the octal path of cpp_int
    CHECK(parse_rational("0.577215") == Rational(577215, 1000000));
    CHECK(parse_rational("00012") == Rational(12));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("rational directed conversion brackets the value") {
    for (const Rational& q : {Rational(1, 3), Rational(-22, 7), Rational(1, 10), Rational(0),
                              Rational(123456789, 1024)}) {
        double lo = to_double_down(q), hi = to_double_up(q);
        CHECK(Rational(rational_of(lo)) <= q);
        CHECK(q <= Rational(rational_of(hi)));
        CHECK(hi - lo <= 2 * std::abs(lo) * 1e-15 + 1e-300);
    }
}

TEST_CASE("dyadic rounding brackets and stays close") {
    Rational q(355, 113);
    Rational fl = dyadic_floor(q, 64), ce = dyadic_ceil(q, 64);
    CHECK(fl <= q);
    CHECK(q <= ce);
    CHECK(ce - fl <= Rational(1, BigInt(1) << 62));
}

TEST_CASE("interval arithmetic contains exact results") {
    auto iv = [](const Rational& q) { return interval_of(q); };
    Rational a(1, 3), b(-7, 5);
    CHECK(iv(a + b).contains(to_double_down(a + b)));
    CHECK((iv(a) * iv(b)).contains(to_double_down(a * b)));
    CHECK((iv(a) / iv(b)).contains(to_double_up(a / b)));
    CHECK(pow_int(iv(b), 3).contains(to_double_down(pow_rat(b, 3))));
    CHECK_THROWS(iv(a) / Interval(-1.0, 1.0));
}

TEST_CASE("interval exp and ln enclose reference digits") {
    Interval e = exp(Interval(1.0));
    CHECK(e.lo <= 2.71828182845904523536);
    CHECK(2.71828182845904523537 <= e.hi);
    CHECK(e.hi - e.lo < 1e-14);
    Interval l2 = ln(Interval(2.0));
    CHECK(l2.lo <= 0.69314718055994530941);
    CHECK(0.69314718055994530942 <= l2.hi);
    Interval p = pow_real(Interval(2.0), interval_of(Rational(1, 2)));
    CHECK(p.lo <= 1.41421356237309504880);
    CHECK(1.41421356237309504881 <= p.hi);
}

TEST_CASE("exact interval tighten is outward and narrow") {
    ExactInterval v(Rational(1, 3), Rational(2, 3));
    ExactInterval t = v.tighten(128);
    CHECK(t.lo <= v.lo);
    CHECK(v.hi <= t.hi);
    CHECK(t.width() - v.width() <= Rational(1, BigInt(1) << 126));

    ExactInterval prod = ExactInterval(Rational(-1), Rational(2)) * ExactInterval(Rational(3));
    CHECK(prod.lo == -3);
    CHECK(prod.hi == 6);
    CHECK(ExactInterval::centered(Rational(0), Rational(1, 2)).contains(Rational(-1, 2)));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (unsigned m = 3; m < 40; m += 2) CHECK_THROWS(bernoulli(m));
    for (unsigned m = 2; m < 40; m += 2)
        CHECK(sign_of(bernoulli(m)) == ((m % 4 == 2) ? 1 : -1));
}

TEST_CASE("grid parsing and points") {
    GridSpec g = GridSpec::parse("log:1e-3:1e3:5");
    auto pts = g.points();
    REQUIRE(pts.size() == 5);
    CHECK(pts.front() == Rational(1, 1000));
    CHECK(pts.back() == Rational(1000));
    for (size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1] < pts[i]);

    GridSpec lin = GridSpec::parse("linear:1:3:5");
    auto lp = lin.points();
    REQUIRE(lp.size() == 5);
    CHECK(lp[1] == Rational(3, 2));
    CHECK(lp[3] == Rational(5, 2));

    CHECK_THROWS(GridSpec::parse("log:1:2"));
    CHECK_THROWS(GridSpec::parse("log:2:1:10"));
    CHECK_THROWS(GridSpec::parse("log:-1:2:10"));
}

TEST_CASE("polynomial shift, derivative, exact division") {
    Polynomial p({Rational(-6), Rational(11), Rational(-6), Rational(1)});  // (x-1)(x-2)(x-3)
    Polynomial s = p.shift(Rational(2));
    for (const Rational& x : {Rational(0), Rational(1, 2), Rational(-3), Rational(7, 3)})
        CHECK(s.eval(x) == p.eval(x + 2));

    Polynomial d = p.derivative();
    CHECK(d == Polynomial({Rational(11), Rational(-12), Rational(3)}));

    Polynomial q({Rational(-2), Rational(1)});
    Polynomial quo = p.divide_exact(q);
    CHECK(quo * q == p);
    CHECK_THROWS(Polynomial({Rational(1), Rational(1)}).divide_exact(q));

    CHECK(descartes_bound(p) == 3);
    CHECK(descartes_bound(Polynomial({Rational(1), Rational(2), Rational(3)})) == 0);
}

TEST_CASE("rational function derivative is exact") {
    RationalFunction r = RationalFunction::inv_shifted_power(Rational(1), 2);  // 1/(x+1)^2
    RationalFunction d = r.derivative();
    for (const Rational& x : {Rational(0), Rational(1), Rational(5, 2)})
        CHECK(d.eval(x) == Rational(-2) / pow_rat(x + 1, 3));
    CHECK_THROWS(r.eval(Rational(-1)));
}

TEST_CASE("exppoly derivative, taylor coefficients, series evaluation") {
    // t e^t has derivative (1+t) e^t
    ExpPoly te = ExpPoly::term(1, Polynomial({Rational(0), Rational(1)}));
    ExpPoly d = te.derivative();
    CHECK(d == ExpPoly::term(1, Polynomial({Rational(1), Rational(1)})));

    // taylor of t e^t: coefficient of t^m is 1/(m-1)!
    CHECK(te.taylor_coeff(0) == 0);
    CHECK(te.taylor_coeff(1) == 1);
    CHECK(te.taylor_coeff(4) == Rational(1, 6));

    // series evaluation agrees with the interval route where both apply
    Rational t(1, 8);
    ExactInterval se = te.eval_series(t);
    Interval ie = te.eval(interval_of(t));
    CHECK(se.lo <= Rational(rational_of(ie.hi)));
    CHECK(Rational(rational_of(ie.lo)) <= se.hi);

    ExpPoly shifted = te.exp_shift(2);
    CHECK(shifted.poly(3) == te.poly(1));
}
