#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twinkit/building.hpp"
#include "twinkit/gcm.hpp"
#include "twinkit/report.hpp"

namespace twinkit::cli {

inline constexpr const char* kVersion = "0.3.0";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kMalformed = 2;

struct RunConfig {
    /// thin | sl_n | kac_moody | file
    std::string model = "thin";
    /// Named type ("A2", "B2", "G2", "~A1") used when no GCM document is given.
    std::string type = "A2";
    std::optional<nlohmann::json> gcm;
    int n = 3;
    int p = 2;
    std::optional<int> cap;
    int height = 4;
    /// Empty selects every suite available for the model.
    std::vector<std::string> suites;
    std::string out;
    std::uint64_t seed = 1;
    bool dot = false;
    bool timings = false;
    /// Building document for model "file".
    nlohmann::json building;

    nlohmann::json to_json() const;
    /// Keys as in to_json(); unknown keys are rejected. Throws MalformedInput.
    static RunConfig from_json(const nlohmann::json& j);
};

/// Throws MalformedInput for out-of-range parameters.
void validate(const RunConfig& cfg);
Gcm config_gcm(const RunConfig& cfg);
TwinBuilding config_building(const RunConfig& cfg);
std::vector<std::string> available_suites(const RunConfig& cfg);

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool passed() const { return all_passed(checks); }
};

struct Report {
    std::string command;
    nlohmann::json config;
    std::uint64_t seed = 0;
    /// Sorted by suite name.
    std::vector<SuiteResult> suites;
    nlohmann::json certified;

    bool passed() const;
    /// Timings are included only on request so that reports stay byte-stable.
    nlohmann::json to_json(bool timings) const;
};

/// Runs the selected suites in parallel and merges them by name.
Report cmd_check(const RunConfig& cfg);

/// kind: bruhat | birkhoff | ult. Throws NotSpecialLinear, MalformedInput, NotInBigCell.
nlohmann::json cmd_decompose(const nlohmann::json& matrix, const std::string& kind);

struct Artifact {
    nlohmann::json json;
    std::string dot;
};

/// kind: census | strata | dynkin | building. For dynkin, action is enumerate | gcm | collapse.
Artifact cmd_report(const std::string& kind, const RunConfig& cfg, const std::string& action = "enumerate");

/// Full command line front end; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace twinkit::cli
