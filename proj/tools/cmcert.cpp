// Command-line front end: evaluation, certification suites, sweeps, and
// machine-readable JSON/CSV reports.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cmcert/certify.hpp>

using namespace cmcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct OutputOptions {
    std::string path;
    std::string format;  // "", "json", "csv"
    bool allow_indeterminate = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "Write the report to this file");
    cmd->add_option("--format", out.format, "Report format: json or csv (default: by extension)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--allow-indeterminate", out.allow_indeterminate,
                  "Treat indeterminate verdicts as acceptable for the exit code");
}

int emit(Report& rep, const OutputOptions& out, const nlohmann::json& config) {
    rep.config = config;
    if (!out.path.empty()) {
        bool csv = out.format == "csv" ||
                   (out.format.empty() && out.path.size() > 4 &&
                    out.path.substr(out.path.size() - 4) == ".csv");
        std::ofstream f(out.path);
        if (!f) {
            std::cerr << "cannot open output file: " << out.path << "\n";
            return kExitUsage;
        }
        if (csv)
            f << rep.to_csv();
        else
            f << rep.to_json().dump(2) << "\n";
    }
    for (const auto& c : rep.checks)
        std::cout << c.name << ": " << to_string(c.status) << "\n";
    return rep.all_passed(out.allow_indeterminate) ? kExitOk : kExitCheckFailure;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& raw) {
    std::vector<Rational> out;
    out.reserve(raw.size());
    for (const auto& s : raw) out.push_back(parse_rational(s));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval certification of complete-monotonicity bounds for "
                 "[psi'(x)]^2 + psi''(x)"};
    app.require_subcommand(1);

    std::string grid_str = "log:1e-3:1e3:200";
    int orders = 12;
    double tol = 1e-8;
    std::string lambda_str = "0";
    std::string x_str = "1";
    std::string fn = "f";
    std::string sign_str = "plus";
    std::vector<std::string> lambda_list, x_list, alpha_list, beta_list;
    OutputOptions out;

    auto* eval = app.add_subcommand("eval", "Evaluate a named function enclosure at a point");
    eval->add_option("--fn", fn,
                     "One of: f, s, h, b, g, lambda, ratio, bracket, middle")
        ->check(CLI::IsMember({"f", "s", "h", "b", "g", "lambda", "ratio", "bracket", "middle"}));
    eval->add_option("--lambda", lambda_str, "Parameter lambda (exact rational or decimal)");
    eval->add_option("--x", x_str, "Evaluation point (exact rational or decimal)");
    add_output_flags(eval, out);

    auto* cm = app.add_subcommand("certify-cm", "Grid-certify (-1)^n f_lambda^(n) signs");
    cm->add_option("--lambda", lambda_str, "Parameter lambda");
    cm->add_option("--sign", sign_str, "plus (f CM) or minus (-f CM)")
        ->check(CLI::IsMember({"plus", "minus"}));
    cm->add_option("--orders", orders, "Highest derivative order");
    cm->add_option("--grid", grid_str, "Grid spec, e.g. log:1e-3:1e3:200");
    add_output_flags(cm, out);

    auto* kv = app.add_subcommand("kernel-verify", "Exact kernel identities and positivity");
    add_output_flags(kv, out);

    auto* bc = app.add_subcommand("bounds-check", "Classic inequality suite on a grid");
    bc->add_option("--grid", grid_str, "Grid spec");
    add_output_flags(bc, out);

    auto* lc = app.add_subcommand("laplace-check", "Quadrature cross-check of h_lambda");
    lc->add_option("--lambda", lambda_str, "Parameter lambda");
    lc->add_option("--x", x_list, "Evaluation points (default 1 2 5)");
    lc->add_option("--tol", tol, "Agreement tolerance");
    add_output_flags(lc, out);

    auto* pr = app.add_subcommand("profile", "Lambda-profile enclosures over a grid");
    pr->add_option("--grid", grid_str, "Grid spec");
    add_output_flags(pr, out);

    auto* sw = app.add_subcommand("sweep-sharpness", "Sharpness probes for 0 < lambda < 4");
    sw->add_option("--lambda", lambda_list, "Lambda values (default 1/10 1 2 3 39/10)");
    add_output_flags(sw, out);

    auto* cs = app.add_subcommand("conjecture-scan", "Exploratory conjectured-bound scan");
    cs->add_option("--alpha", alpha_list, "Lower-side exponents (default 6/5)");
    cs->add_option("--beta", beta_list, "Upper-side exponents (default 1)");
    cs->add_option("--grid", grid_str, "Grid spec");
    add_output_flags(cs, out);

    auto* all = app.add_subcommand("all", "Run every suite with defaults");
    all->add_option("--grid", grid_str, "Grid spec");
    all->add_option("--orders", orders, "Highest derivative order for CM suites");
    all->add_option("--tol", tol, "Laplace tolerance");
    add_output_flags(all, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        PolygammaEngine engine;
        if (eval->parsed()) {
            Rational lambda = parse_rational(lambda_str);
            Rational x = parse_rational(x_str);
            Interval v;
            if (fn == "f")
                v = f_lambda(lambda, FLambdaForm::Direct).eval_exact(x, engine).to_interval();
            else if (fn == "s")
                v = engine.s_combo_exact(x).to_interval();
            else if (fn == "h")
                v = h_lambda(lambda).eval_exact(x, engine).to_interval();
            else if (fn == "b")
                v = interval_of(bound_rational(lambda).eval(x));
            else if (fn == "g")
                v = g_lambda(lambda).eval_exact(x, engine).to_interval();
            else if (fn == "lambda")
                v = lambda_profile_at(x, engine);
            else if (fn == "ratio")
                v = ratio_pq(x);
            else if (fn == "bracket")
                v = psi_bound_middle_and_bracket().second.eval_exact(x, engine).to_interval();
            else
                v = psi_bound_middle_and_bracket().first.eval_exact(x, engine).to_interval();
            std::cout.precision(17);
            std::cout << "[" << v.lo << ", " << v.hi << "]\n";
            Report rep;
            rep.command = "eval";
            Check& c = rep.add("eval-" + fn);
            c.status = CheckStatus::Pass;
            c.witness({{"x", to_double_down(x)}, {"lo", v.lo}, {"hi", v.hi}});
            return emit(rep, out,
                        {{"fn", fn}, {"lambda", to_string(lambda)}, {"x", to_string(x)}});
        }
        if (cm->parsed()) {
            Rational lambda = parse_rational(lambda_str);
            GridSpec grid = GridSpec::parse(grid_str);
            CmSign sign = sign_str == "plus" ? CmSign::Plus : CmSign::Minus;
            Report rep = check_cm(f_lambda(lambda, FLambdaForm::Direct), sign, orders, grid, engine);
            rep.command = "certify-cm";
            return emit(rep, out,
                        {{"lambda", to_string(lambda)},
                         {"sign", sign_str},
                         {"orders", orders},
                         {"grid", grid_str}});
        }
        if (kv->parsed()) {
            Report rep = verify_kernel();
            return emit(rep, out, nlohmann::json::object());
        }
        if (bc->parsed()) {
            Report rep = classic_inequalities(GridSpec::parse(grid_str), engine);
            return emit(rep, out, {{"grid", grid_str}});
        }
        if (lc->parsed()) {
            Rational lambda = parse_rational(lambda_str);
            std::vector<Rational> xs = x_list.empty()
                                           ? std::vector<Rational>{1, 2, 5}
                                           : parse_rationals(x_list);
            Report rep = verify_laplace(lambda, xs, tol, engine);
            return emit(rep, out, {{"lambda", to_string(lambda)}, {"tol", tol}});
        }
        if (pr->parsed()) {
            GridSpec grid = GridSpec::parse(grid_str);
            Report rep;
            rep.command = "profile";
            Check& c = rep.add("profile-in-0-4");
            c.status = CheckStatus::Pass;
            for (const auto& [x, v] : lambda_profile(grid, engine)) {
                c.witness({{"x", to_double_down(x)}, {"lo", v.lo}, {"hi", v.hi}});
                if (!(v.lo > 0 && v.hi < 4)) c.status = CheckStatus::Fail;
            }
            return emit(rep, out, {{"grid", grid_str}});
        }
        if (sw->parsed()) {
            std::vector<Rational> lams = lambda_list.empty()
                                             ? std::vector<Rational>{rat(1, 10), 1, 2, 3, rat(39, 10)}
                                             : parse_rationals(lambda_list);
            Report rep;
            rep.command = "sweep-sharpness";
            for (const Rational& lam : lams) {
                if (lam > 0) {
                    Check& c = rep.add("near-zero-negative-lambda-" + to_string(lam));
                    ProbeResult r = sharpness_probe(lam, ProbeDirection::NearZero, engine);
                    c.status = r.found ? CheckStatus::Pass : CheckStatus::Fail;
                    if (r.found)
                        c.witness({{"x", to_double_down(r.x)}, {"lo", r.value.lo}, {"hi", r.value.hi}});
                }
                if (lam < 4) {
                    Check& c = rep.add("near-infinity-positive-lambda-" + to_string(lam));
                    ProbeResult r = sharpness_probe(lam, ProbeDirection::NearInfinity, engine);
                    c.status = r.found ? CheckStatus::Pass : CheckStatus::Fail;
                    if (r.found)
                        c.witness({{"x", to_double_down(r.x)}, {"lo", r.value.lo}, {"hi", r.value.hi}});
                }
            }
            return emit(rep, out, nlohmann::json::object());
        }
        if (cs->parsed()) {
            std::vector<Rational> alphas =
                alpha_list.empty() ? std::vector<Rational>{rat(6, 5)} : parse_rationals(alpha_list);
            std::vector<Rational> betas =
                beta_list.empty() ? std::vector<Rational>{1} : parse_rationals(beta_list);
            Report rep = conjecture_scan(alphas, betas, GridSpec::parse(grid_str), engine);
            return emit(rep, out, {{"grid", grid_str}});
        }
        // all
        GridSpec grid = GridSpec::parse(grid_str);
        Report rep;
        rep.command = "all";
        rep.merge(verify_kernel());
        rep.merge(classic_inequalities(grid, engine));
        {
            Report r = check_cm(f_lambda(0, FLambdaForm::Direct), CmSign::Plus, orders, grid, engine);
            for (auto& c : r.checks) c.name = "f0-" + c.name;
            rep.merge(r);
            r = check_cm(f_lambda(4, FLambdaForm::Direct), CmSign::Minus, orders, grid, engine);
            for (auto& c : r.checks) c.name = "f4-" + c.name;
            rep.merge(r);
        }
        {
            Check& c = rep.add("profile-in-0-4");
            c.status = CheckStatus::Pass;
            for (const auto& [x, v] : lambda_profile(grid, engine))
                if (!(v.lo > 0 && v.hi < 4)) {
                    c.status = CheckStatus::Fail;
                    c.witness({{"x", to_double_down(x)}, {"lo", v.lo}, {"hi", v.hi}});
                }
        }
        rep.merge(verify_ratio(GridSpec::log_spaced(rat(1, 1000000), 60, 100)));
        for (int lam : {0, 4, 13}) {
            Report r = verify_difference_identity(lam, GridSpec::log_spaced(rat(1, 10), 100, 20),
                                                  engine);
            for (auto& c : r.checks) c.name += "-lambda-" + std::to_string(lam);
            rep.merge(r);
        }
        for (int lam : {0, 4}) {
            Report r = verify_laplace(lam, {1, 2, 5}, tol, engine);
            for (auto& c : r.checks) c.name += "-lambda-" + std::to_string(lam);
            rep.merge(r);
        }
        rep.merge(asymptotic_check({10, 30, 100}, engine));
        rep.merge(conjecture_scan({rat(6, 5)}, {1}, grid, engine));
        return emit(rep, out, {{"grid", grid_str}, {"orders", orders}, {"tol", tol}});
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
