#ifndef KERIND_RUNNER_HPP
#define KERIND_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kerind/scenario.hpp"

namespace kerind {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "kerind-report/1";

struct RunOptions {
    std::string command = "all";  // "all" runs the scenario's task list
    std::optional<std::vector<std::uint32_t>> levels;
    std::optional<std::uint64_t> cap;
    std::optional<std::uint32_t> bound;
    std::uint64_t seed = 0;  // randomized spot checks only; never exact verdicts
};

struct RunReport {
    nlohmann::ordered_json json;
    bool all_pass = true;
    std::string digest;
};

// Executes the selected tasks; per-task errors are recorded in the report
// (failing it) while the remaining tasks still run.
RunReport run_scenario(const Scenario& sc, const RunOptions& opt);

std::string report_text(const RunReport& r);

}  // namespace kerind

#endif
