#pragma once

#include <string>
#include <vector>

namespace ospoly {

// Pass/Fail are definite verdicts.  Resolved marks a variant arbitration: the
// winning reading is recorded in `variant` and the entry never fails a build
// by itself; an arbitration with no surviving reading reports Fail instead.
enum class CheckStatus { Pass, Fail, Resolved };

std::string status_name(CheckStatus s);

struct Check {
    std::string id;
    std::string ref; // the identity this check verifies, in plain math text
    CheckStatus status = CheckStatus::Pass;
    std::string variant;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;

    bool all_passed() const;
    int fail_count() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    void merge(const SuiteReport& other);
};

// Deterministic JSON: {"suite": ..., "checks": [{"id", "ref", "status",
// "variant"?, "detail"?}, ...]}.
std::string to_json(const SuiteReport& report);

// One human line per check, plus a summary line.
std::string to_text(const SuiteReport& report);

} // namespace ospoly
