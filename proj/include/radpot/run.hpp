#pragma once

#include <string>

#include "radpot/config.hpp"
#include "radpot/report.hpp"

namespace radpot {

enum class Command { Check, Solve, Verify, Sweep };

Command command_from_string(const std::string& s);
const char* to_string(Command c);

/// Runs the scenario (or the whole sweep) and assembles the report.
/// Library errors surface as structured entries inside the scenarios,
/// never as exceptions. `jobs` bounds sweep concurrency.
RunReport run_scenario(const ScenarioConfig& cfg, Command command, int jobs = 1);

} // namespace radpot
