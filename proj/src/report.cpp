#include "twinkit/report.hpp"

#include <algorithm>

namespace twinkit {

nlohmann::json CheckResult::to_json() const {
    nlohmann::json j{{"name", name}, {"status", skipped ? "skipped" : passed ? "pass" : "fail"}, {"instances", instances}};
    if (!detail.empty()) j["detail"] = detail;
    if (!passed) j["witness"] = witness;
    return j;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
    auto j = nlohmann::json::array();
    for (const auto& r : results) j.push_back(r.to_json());
    return j;
}

} // namespace twinkit
