// End-to-end acceptance gate: one pass/fail line per criterion; nonzero exit
// if anything fails. Budgeted to finish well under five minutes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <cmcert/certify.hpp>

#include "series_oracle.hpp"

using namespace cmcert;

namespace {

int g_failures = 0;

void verdict(int number, const std::string& name, bool ok, double seconds) {
    std::printf("criterion %2d %-38s %s  (%.1fs)\n", number, name.c_str(),
                ok ? "pass" : "FAIL", seconds);
    if (!ok) ++g_failures;
}

template <typename Fn>
void run(int number, const std::string& name, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    verdict(number, name, ok, dt);
}

bool within(const Interval& v, double target, double tol) {
    return std::fabs(v.lo - target) <= tol && std::fabs(v.hi - target) <= tol;
}

}  // namespace

int main() {
    PolygammaEngine engine;
    GridSpec main_grid = GridSpec::log_spaced(rat(1, 1000), 1000, 200);
    std::vector<Rational> main_points = main_grid.points();

    run(1, "kernel-exact-identities", [&] {
        auto t0 = std::chrono::steady_clock::now();
        Report r = verify_kernel();
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r.all_passed() && dt < 30.0;
    });

    run(2, "two-sided-bound-separation", [&] {
        RationalFunction b0 = bound_rational(0), b4 = bound_rational(4);
        for (const Rational& x : main_points) {
            Interval s = engine.s_combo_exact(x).to_interval();
            if (!(to_double_up(b0.eval(x)) < s.lo)) return false;
            if (!(s.hi < to_double_down(b4.eval(x)))) return false;
        }
        return true;
    });

    run(3, "cm-grid-certification-order-12", [&] {
        Report r0 = check_cm(f_lambda(0, FLambdaForm::Direct), CmSign::Plus, 12, main_grid, engine);
        Report r4 = check_cm(f_lambda(4, FLambdaForm::Direct), CmSign::Minus, 12, main_grid, engine);
        return r0.all_passed(false) && r4.all_passed(false) &&
               r0.count(CheckStatus::Indeterminate) == 0 &&
               r4.count(CheckStatus::Indeterminate) == 0;
    });

    run(4, "sharpness-probes", [&] {
        std::vector<Rational> lams{rat(1, 10), 1, 2, 3, rat(39, 10)};
        for (const Rational& lam : lams) {
            if (!sharpness_probe(lam, ProbeDirection::NearZero, engine).found) return false;
            if (!sharpness_probe(lam, ProbeDirection::NearInfinity, engine).found) return false;
        }
        return true;
    });

    run(5, "lambda-profile", [&] {
        for (const auto& [x, v] : lambda_profile(main_grid, engine))
            if (!(v.lo > 0 && v.hi < 4)) return false;
        Interval small = lambda_profile_at(rat(1, 10000), engine);
        Interval big = lambda_profile_at(10000, engine);
        if (!(small.hi < 1e-3 && big.lo > 3.999)) return false;
        Interval at1 = lambda_profile_at(1, engine);
        ExactInterval cross = ExactInterval(Rational(48)) * engine.s_combo_exact(1) -
                              ExactInterval(Rational(13));
        Interval c = cross.to_interval();
        return std::fabs(at1.mid() - c.mid()) < 1e-9;
    });

    run(6, "asymptotic-residual-model", [&] {
        return asymptotic_check({10, 30, 100}, engine).all_passed();
    });

    run(7, "laplace-cross-check", [&] {
        return verify_laplace(0, {1, 2, 5}, 1e-8, engine).all_passed() &&
               verify_laplace(4, {1, 2, 5}, 1e-8, engine).all_passed();
    });

    run(8, "difference-identity-and-telescope", [&] {
        GridSpec g20 = GridSpec::log_spaced(rat(1, 10), 100, 20);
        for (int lam : {0, 4, 13})
            if (!verify_difference_identity(lam, g20, engine).all_passed()) return false;
        Interval sum = telescope(0, 1, 200, engine);
        Interval f01 = f_lambda(0, FLambdaForm::Direct).eval_exact(1, engine).to_interval();
        return std::fabs(sum.mid() - f01.mid()) < 1e-6;
    });

    run(9, "polygamma-oracle-containment", [&] {
        std::vector<Rational> pts = GridSpec::log_spaced(rat(1, 100), 100, 50).points();
        for (const Rational& x : pts) {
            for (int n = 0; n <= 6; ++n) {
                Interval eng = engine.polygamma_enclosure(n, x).to_interval();
                Interval ora = oracle::polygamma_series(n, x);
                if (!(ora.lo <= eng.lo && eng.hi <= ora.hi)) return false;
                double scale = std::max(std::fabs(eng.lo), std::fabs(eng.hi));
                if (!(eng.width() <= 1e-12 * scale)) return false;
            }
            // recurrence: psi^(n)(x+1) - psi^(n)(x) = (-1)^n n! / x^{n+1}
            for (int n = 0; n <= 6; ++n) {
                ExactInterval diff = engine.polygamma_enclosure(n, x + 1) -
                                     engine.polygamma_enclosure(n, x);
                Rational want = Rational(factorial(n)) / pow_rat(x, n + 1);
                if (n % 2 == 1) want = -want;
                if (!diff.contains(want)) return false;
            }
        }
        return true;
    });

    run(10, "classic-inequality-suite", [&] {
        return classic_inequalities(main_grid, engine).all_passed();
    });

    run(11, "g-family", [&] {
        for (int lam : {0, 4}) {
            ClosedForm gen = g_lambda(lam);
            ClosedForm exp = g_explicit(lam);
            for (const Rational& x : {rat(1, 2), Rational(1), Rational(3)}) {
                Interval a = gen.eval_exact(x, engine).to_interval();
                Interval b = exp.eval_exact(x, engine).to_interval();
                if (!(std::fabs(a.mid() - b.mid()) < 1e-10)) return false;
            }
        }
        // sign patterns: (-1)^n G0^(n) >= 0 and (-1)^{n+1} G4^(n) >= 0, n=1..8
        std::vector<Rational> pts = GridSpec::log_spaced(rat(1, 1000), 1000, 40).points();
        ClosedForm g0 = g_lambda(0), g4 = g_lambda(4);
        for (int n = 1; n <= 8; ++n) {
            g0 = g0.derivative();
            g4 = g4.derivative();
            for (const Rational& x : pts) {
                Interval v0 = g0.eval_exact(x, engine).to_interval();
                Interval v4 = g4.eval_exact(x, engine).to_interval();
                bool ok0 = (n % 2 == 0) ? (v0.lo >= 0) : (v0.hi <= 0);
                bool ok4 = (n % 2 == 0) ? (v4.hi <= 0) : (v4.lo >= 0);
                if (!ok0 || !ok4) return false;
            }
        }
        // limits
        for (int lam : {0, 4}) {
            auto [zero, inf] = g_limits(lam);
            ClosedForm g = g_lambda(lam);
            Interval near0 = g.eval_exact(rat(1, 100000000), engine).to_interval();
            if (!(std::fabs(near0.mid() - zero.mid()) < 1e-4)) return false;
            Interval a = g.eval_exact(1000000, engine).to_interval();
            Interval b = g.eval_exact(10000000, engine).to_interval();
            double extrap = (10.0 * b.mid() - a.mid()) / 9.0;
            if (!(std::fabs(extrap - inf.mid()) < 1e-4)) return false;
        }
        return true;
    });

    run(12, "ratio-monotone-endpoints", [&] {
        return verify_ratio(GridSpec::log_spaced(rat(1, 1000000), 60, 100)).all_passed();
    });

    run(13, "conjecture-scan-exploratory", [&] {
        return conjecture_scan({rat(6, 5)}, {1}, main_grid, engine).all_passed();
    });

    std::printf("%s: %d of 13 criteria passed\n", g_failures == 0 ? "SUCCESS" : "FAILURE",
                13 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
