#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cmcert {

/// Evaluation grid over a positive range. Every generated point is an exact
/// rational (log-spaced points are representable doubles, taken exactly).
struct GridSpec {
    enum class Kind { LogSpaced, Linear };

    Kind kind = Kind::LogSpaced;
    Rational start;
    Rational end;
    int count = 2;

    GridSpec() = default;
    GridSpec(Kind k, Rational s, Rational e, int n)
        : kind(k), start(std::move(s)), end(std::move(e)), count(n) {
        if (start <= 0 || end <= 0) throw std::domain_error("GridSpec: bounds must be positive");
        if (!(start < end)) throw std::domain_error("GridSpec: start must be < end");
        if (count < 2) throw std::domain_error("GridSpec: count must be >= 2");
    }

    static GridSpec log_spaced(const Rational& s, const Rational& e, int n) {
        return GridSpec(Kind::LogSpaced, s, e, n);
    }
    static GridSpec linear(const Rational& s, const Rational& e, int n) {
        return GridSpec(Kind::Linear, s, e, n);
    }

    /// "log:1e-3:1e3:200" or "linear:1:10:20"
    static GridSpec parse(const std::string& s) {
        auto p1 = s.find(':');
        auto p2 = s.find(':', p1 + 1);
        auto p3 = s.find(':', p2 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos || p3 == std::string::npos)
            throw std::invalid_argument("GridSpec: expected kind:start:end:count");
        std::string kind = s.substr(0, p1);
        Rational a = parse_rational(s.substr(p1 + 1, p2 - p1 - 1));
        Rational b = parse_rational(s.substr(p2 + 1, p3 - p2 - 1));
        int n = std::stoi(s.substr(p3 + 1));
        if (kind == "log") return log_spaced(a, b, n);
        if (kind == "linear") return linear(a, b, n);
        throw std::invalid_argument("GridSpec: unknown kind '" + kind + "'");
    }

    std::vector<Rational> points() const {
        std::vector<Rational> pts;
        pts.reserve(count);
        if (kind == Kind::Linear) {
            Rational step = (end - start) / Rational(count - 1);
            for (int i = 0; i < count; ++i) pts.push_back(start + Rational(i) * step);
        } else {
            double la = std::log(start.convert_to<double>());
            double lb = std::log(end.convert_to<double>());
            pts.push_back(start);
            for (int i = 1; i + 1 < count; ++i) {
                double x = std::exp(la + (lb - la) * i / (count - 1));
                pts.push_back(rational_of(x));
            }
            pts.push_back(end);
        }
        return pts;
    }
};

}  // namespace cmcert
