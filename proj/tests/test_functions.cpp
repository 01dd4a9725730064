#include <doctest.h>

#include <cmcert/certify.hpp>
#include <cmcert/functions.hpp>
#include <cmcert/report.hpp>

using namespace cmcert;

namespace {

PolygammaEngine& engine() {
    static PolygammaEngine e;
    return e;
}

bool matches(const ExactInterval& v, const std::string& digits, double band = 1e-30) {
    Rational q = parse_rational(digits);
    Rational eps = rational_of(band);
    return v.lo >= q - eps && v.hi <= q + eps && v.width() < eps;
}

bool matches(const Interval& v, const std::string& digits, double band) {
    double q = std::stod(digits);
    return v.lo >= q - band && v.hi <= q + band;
}

}  // namespace

TEST_CASE("two-sided bound family at x = 1") {
    CHECK(bound_rational(0).eval(Rational(1)) == Rational(13, 48));
    CHECK(bound_rational(4).eval(Rational(1)) == Rational(17, 48));
    CHECK(classic_bound(ClassicBound::TwoSidedUpper).eval(Rational(1)) == Rational(13, 24));
    CHECK(classic_bound(ClassicBound::WeakUpper).eval(Rational(1)) == Rational(1633, 2304));
    CHECK(classic_bound(ClassicBound::P900Lower).eval(Rational(1)) == Rational(189241, 921600));
    CHECK(h_rational().eval(Rational(1)) == Rational(1, 48));
}

TEST_CASE("decomposition identities hold exactly") {
    for (const Rational& l :
         {Rational(0), Rational(4), Rational(13), Rational(-3), Rational(7, 2)})
        CHECK(decomposition_identities(l));
}

TEST_CASE("f_lambda reference values") {
    CHECK(matches(f_lambda(0, FLambdaForm::Direct).eval_exact(Rational(1), engine()),
                  "0.03086094462532357465719958499668644207"));
    CHECK(matches(f_lambda(4, FLambdaForm::Direct).eval_exact(Rational(1), engine()),
                  "-0.05247238870800975867613374833664689126"));
    CHECK(matches(f_lambda(0, FLambdaForm::Direct).eval_exact(Rational(2), engine()),
                  "0.002566885002944775786443325778710137710"));
}

TEST_CASE("two f_lambda forms agree across the route boundary") {
    for (const Rational& x : {Rational(1, 100), Rational(1, 2), Rational(3, 2), Rational(10)}) {
        ExactInterval a = f_lambda(2, FLambdaForm::Direct).eval_exact(x, engine());
        ExactInterval b = f_lambda(2, FLambdaForm::Shifted).eval_exact(x, engine());
        CHECK(a.lo <= b.hi);
        CHECK(b.lo <= a.hi);
    }
}

TEST_CASE("h_lambda reference value") {
    CHECK(matches(h_lambda(0).eval_exact(Rational(1), engine()),
                  "0.01414702981118939943537812960898815218"));
}

TEST_CASE("kernel series coefficients and values") {
    ExpPoly q = kernel_q();
    CHECK(q.taylor_coeff(0) == 0);
    CHECK(q.taylor_coeff(2) == 0);
    CHECK(q.taylor_coeff(3) == Rational(5, 3));
    CHECK(q.taylor_coeff(4) == Rational(13, 12));
    CHECK(q.taylor_coeff(5) == Rational(7, 15));
    CHECK(q.taylor_coeff(6) == Rational(29, 180));
    CHECK(matches(q.eval(Interval(1.0)), "3.440448427893712394777117793565403155517", 1e-12));
}

TEST_CASE("u polynomial shifted to (2, inf) is sign definite") {
    Polynomial u = u_polynomial();
    CHECK(u.eval(Rational(0)) == 883);
    CHECK(u.eval(Rational(1)) == -77);
    CHECK(u.eval(Rational(2)) == 3787);
    Polynomial shifted = u.shift(Rational(2));
    CHECK(shifted == Polynomial({Rational(3787), Rational(7716), Rational(4572), Rational(720)}));
}

TEST_CASE("theta chain bookkeeping") {
    auto chain = theta_chain();
    CHECK(chain.size() == 19);
    int derivative_links = 0, factor_links = 0;
    for (const auto& e : chain) {
        if (e.link == ThetaEntry::Link::Derivative) ++derivative_links;
        if (e.link == ThetaEntry::Link::Factorization) ++factor_links;
    }
    CHECK(derivative_links == 15);
    CHECK(factor_links == 3);
}

TEST_CASE("psi double inequality pieces at x = 1") {
    auto [middle, bracket] = psi_bound_middle_and_bracket();
    CHECK(matches(middle.eval_exact(Rational(1), engine()),
                  "-0.01305023435002003671488555506598154581", 1e-12));
    CHECK(matches(bracket.eval_exact(Rational(1), engine()),
                  "-0.006573318709498482788602522128196533701", 1e-12));
}

TEST_CASE("G family reference value and explicit forms") {
    CHECK(matches(g_lambda(0).eval_exact(Rational(1), engine()),
                  "6.103709328260100274848366037063771045229", 1e-12));
    for (int l : {0, 4}) {
        ExactInterval a = g_lambda(l).eval_exact(Rational(3, 2), engine());
        ExactInterval b = g_explicit(l).eval_exact(Rational(3, 2), engine());
        CHECK(a.lo <= b.hi);
        CHECK(b.lo <= a.hi);
    }
    auto [at_zero, at_inf] = g_limits(0);
    CHECK(matches(at_zero, "6.130329669026110645741859901491461775434", 1e-12));
    CHECK(matches(at_inf, "6.085605199871339408446996403072284306528", 1e-12));
}

TEST_CASE("conjectured side evaluation") {
    ConjectureSide side{Rational(6, 5)};
    CHECK(matches(side.eval(Rational(1)), "0.2877724543418111611135131371912049944963", 1e-12));
    CHECK_THROWS(side.eval(Rational(-1)));
    CHECK_THROWS(ConjectureSide{Rational(-1)});
}

TEST_CASE("lambda profile reference value") {
    CHECK(matches(lambda_profile_at(Rational(1), engine()),
                  "1.481325342015531583545580079840949219532", 1e-12));
    CHECK(matches(lambda_profile_at(Rational(1, 10000), engine()),
                  "2.478143471017600502973556014153592071e-4", 1e-12));
}

TEST_CASE("telescoped difference sum approaches f_lambda") {
    Interval partial = telescope(0, Rational(1), 200, engine());
    double f0 = 0.030860944625323574657;
    CHECK(std::abs(partial.lo - f0) < 1e-5);
    CHECK(std::abs(partial.hi - f0) < 1e-5);
}

TEST_CASE("difference identity on a short grid") {
    Report r = verify_difference_identity(Rational(13), GridSpec::log_spaced(1, 10, 4), engine());
    CHECK(r.all_passed());
}

TEST_CASE("ratio monotonicity on a short grid") {
    Report r = verify_ratio(GridSpec::log_spaced(Rational(1, 1000), Rational(60), 12));
    CHECK(r.all_passed(true));
    CHECK(ratio_pq(Rational(1, 1000000)).hi > 1.0 - 1e-6);
    CHECK(ratio_pq(Rational(60)).hi < 1e-15);
}

TEST_CASE("complete monotonicity spot check") {
    GridSpec tiny = GridSpec::log_spaced(Rational(1, 2), Rational(10), 4);
    Report plus = check_cm(f_lambda(0, FLambdaForm::Direct), CmSign::Plus, 4, tiny, engine(), 1);
    CHECK(plus.all_passed());
    Report minus = check_cm(f_lambda(4, FLambdaForm::Direct), CmSign::Minus, 4, tiny, engine(), 1);
    CHECK(minus.all_passed());
    // lambda strictly inside (0, 4) must fail one of the two signs somewhere
    Report wrong = check_cm(f_lambda(2, FLambdaForm::Direct), CmSign::Plus, 1,
                            GridSpec::log_spaced(Rational(1, 100), Rational(100), 6), engine(), 1);
    CHECK_FALSE(wrong.all_passed());
}

TEST_CASE("report serialization") {
    Report r;
    r.command = "demo";
    r.config = {{"tol", 1e-8}};
    Check& c1 = r.add("first");
    c1.status = CheckStatus::Pass;
    c1.witness({{"x", 1.0}, {"n", 2}, {"lo", 0.5}, {"hi", 0.75}});
    Check& c2 = r.add("second");
    c2.status = CheckStatus::Indeterminate;

    CHECK_FALSE(r.all_passed());
    CHECK(r.all_passed(true));

    auto j = r.to_json();
    CHECK(j["command"] == "demo");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["indeterminate"] == 1);

    std::string csv = r.to_csv();
    CHECK(csv.find("check,x,n,lo,hi,status") == 0);
    CHECK(csv.find("first,1") != std::string::npos);
    CHECK(csv.find("second,,,,,indeterminate") != std::string::npos);
}
