#pragma once

#include <string>
#include <vector>

#include "tprop/cli/config.hpp"

namespace tprop::cli {

struct Diagnostic {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool ok = false;  // sense of the comparison is scenario-specific
};

struct RunReport {
    std::string scenario;
    double seconds = 0.0;
    std::vector<std::string> outputs;
    std::vector<Diagnostic> diagnostics;

    bool all_ok() const {
        for (const auto& d : diagnostics)
            if (!d.ok) return false;
        return true;
    }
};

// Runs the configured scenario, writes its output files under out_dir and
// returns the conservation/consistency diagnostics.
RunReport run_scenario(const ScenarioConfig& cfg, const std::string& out_dir);

// (name, description) of every built-in preset.
std::vector<std::pair<std::string, std::string>> list_scenarios();

}  // namespace tprop::cli
