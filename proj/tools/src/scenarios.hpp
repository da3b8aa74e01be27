#pragma once

#include "config.hpp"

#include <string>
#include <vector>

namespace fbns::cli {

struct Verdict {
    std::string check;
    double value = 0.0;
    double limit = 0.0;
    std::string relation;  ///< "<=" or ">="
    bool pass = false;
};

struct RunOutcome {
    std::vector<Verdict> verdicts;
    std::vector<std::string> files;
    bool pass() const;
};

/// Runs cfg.scenario and writes metadata.json, summary.csv and the scenario
/// CSVs into cfg.output_dir.
RunOutcome run_scenario(const ScenarioConfig& cfg);

/// Plain-text summary of a completed run directory; also written to
/// report.txt there. Throws fbns::Error(invalid_input) when artifacts are missing.
std::string emit_report(const std::string& run_dir);

} // namespace fbns::cli
