#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace cmcert {

enum class CheckStatus { Pass, Fail, Indeterminate };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Indeterminate;
    nlohmann::json witnesses = nlohmann::json::array();

    void witness(nlohmann::json w) { witnesses.push_back(std::move(w)); }
};

struct Report {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::vector<Check> checks;

    Check& add(std::string name) {
        checks.push_back(Check{std::move(name)});
        return checks.back();
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    int count(CheckStatus s) const {
        int n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }

    bool all_passed(bool allow_indeterminate = false) const {
        for (const auto& c : checks) {
            if (c.status == CheckStatus::Fail) return false;
            if (c.status == CheckStatus::Indeterminate && !allow_indeterminate) return false;
        }
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command;
        j["config"] = config;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            j["checks"].push_back({{"name", c.name},
                                   {"status", to_string(c.status)},
                                   {"witnesses", c.witnesses}});
        }
        j["summary"] = {{"total", checks.size()},
                        {"pass", count(CheckStatus::Pass)},
                        {"fail", count(CheckStatus::Fail)},
                        {"indeterminate", count(CheckStatus::Indeterminate)}};
        return j;
    }

    // One row per witness: check,x,n,lo,hi,status. Witness fields that a check
    // did not record stay empty.
    std::string to_csv() const {
        std::ostringstream out;
        out << "check,x,n,lo,hi,status\n";
        auto field = [](const nlohmann::json& w, const char* key) -> std::string {
            if (!w.is_object() || !w.contains(key)) return "";
            const auto& v = w.at(key);
            if (v.is_string()) return v.get<std::string>();
            return v.dump();
        };
        for (const auto& c : checks) {
            if (c.witnesses.empty()) {
                out << c.name << ",,,,," << to_string(c.status) << "\n";
                continue;
            }
            for (const auto& w : c.witnesses) {
                out << c.name << ',' << field(w, "x") << ',' << field(w, "n") << ','
                    << field(w, "lo") << ',' << field(w, "hi") << ',' << to_string(c.status)
                    << "\n";
            }
        }
        return out.str();
    }
};

}  // namespace cmcert
