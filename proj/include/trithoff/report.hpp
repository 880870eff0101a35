#pragma once

// Machine-readable conformance reports: a flat list of named checks with
// pass/fail/skip status and an optional witness string.

#include <string>
#include <vector>

#include <json.hpp>

namespace trithoff {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

struct Check {
    std::string name;
    CheckStatus status;
    std::string witness;  // first counterexample or a short result note
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail,
                          std::move(witness)});
    }
    void skip(std::string name, std::string why) {
        checks.push_back({std::move(name), CheckStatus::Skip, std::move(why)});
    }

    size_t count(CheckStatus s) const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }
    bool all_passed() const { return count(CheckStatus::Fail) == 0; }

    std::string to_text(bool meta = true) const {
        std::string out;
        if (meta) out += "# trithoff verify suite=" + suite + "\n";
        for (const auto& c : checks) {
            out += c.name;
            out += ": ";
            out += to_string(c.status);
            if (!c.witness.empty()) {
                out += "  [";
                out += c.witness;
                out += "]";
            }
            out += "\n";
        }
        out += "summary: " + std::to_string(count(CheckStatus::Pass)) + " pass, " +
               std::to_string(count(CheckStatus::Fail)) + " fail, " +
               std::to_string(count(CheckStatus::Skip)) + " skip\n";
        return out;
    }

    std::string to_json(bool meta = true) const {
        nlohmann::json j;
        if (meta) j["tool"] = "trithoff";
        j["suite"] = suite;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json jc;
            jc["name"] = c.name;
            jc["status"] = to_string(c.status);
            if (!c.witness.empty()) jc["witness"] = c.witness;
            j["checks"].push_back(jc);
        }
        j["summary"] = {{"pass", count(CheckStatus::Pass)},
                        {"fail", count(CheckStatus::Fail)},
                        {"skip", count(CheckStatus::Skip)}};
        return j.dump(2) + "\n";
    }
};

}  // namespace trithoff
