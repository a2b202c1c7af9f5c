#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace twinkit {

/// Outcome of one named property check.
struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    bool skipped = false;
    /// Number of instances examined.
    long long instances = 0;
    std::string detail;
    /// First violating tuple, empty on success.
    nlohmann::json witness;

    void fail(std::string why, nlohmann::json w) {
        if (!passed) return;
        passed = false;
        detail = std::move(why);
        witness = std::move(w);
    }
    void skip(std::string why) {
        skipped = true;
        detail = std::move(why);
    }
    nlohmann::json to_json() const;
};

bool all_passed(const std::vector<CheckResult>& results);
nlohmann::json to_json(const std::vector<CheckResult>& results);

} // namespace twinkit
