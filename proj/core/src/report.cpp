#include "ospoly/report.hpp"

#include <json.hpp>

namespace ospoly {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Resolved: return "resolved";
    }
    return "?";
}

bool SuiteReport::all_passed() const { return fail_count() == 0; }

int SuiteReport::fail_count() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) ++n;
    return n;
}

void SuiteReport::merge(const SuiteReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
}

std::string to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["ref"] = c.ref;
        e["status"] = status_name(c.status);
        if (!c.variant.empty()) e["variant"] = c.variant;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string to_text(const SuiteReport& report) {
    std::string out;
    int pass = 0, fail = 0, resolved = 0;
    for (const auto& c : report.checks) {
        switch (c.status) {
            case CheckStatus::Pass:
                ++pass;
                out += "[ok]       ";
                break;
            case CheckStatus::Fail:
                ++fail;
                out += "[FAIL]     ";
                break;
            case CheckStatus::Resolved:
                ++resolved;
                out += "[resolved] ";
                break;
        }
        out += c.id;
        if (!c.variant.empty()) out += " -> " + c.variant;
        if (c.status == CheckStatus::Fail && !c.detail.empty()) out += " : " + c.detail;
        out += "\n";
    }
    out += report.suite + ": " + std::to_string(pass) + " passed, " +
           std::to_string(resolved) + " resolved, " + std::to_string(fail) + " failed\n";
    return out;
}

} // namespace ospoly
