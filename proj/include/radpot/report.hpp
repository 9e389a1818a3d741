#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "radpot/criteria.hpp"
#include "radpot/solver.hpp"
#include "radpot/verify.hpp"

namespace radpot {

/// Everything computed for one parameter point.
struct ScenarioOutcome {
    int sweep_index = -1;
    std::string sweep_param;
    double sweep_value = 0.0;

    ExponentSet exps;
    bool exps_ok = false;
    std::string error; // parameter/solver failures, structured not thrown

    bool has_criteria = false;
    CriteriaReport criteria;

    bool solve_attempted = false;
    bool solve_ok = false;
    SolveResult solve;
    double u_at_unit = 0.0, v_at_unit = 0.0;

    bool verify_attempted = false;
    BoundReport sandwich;
    BoundReport profile;
    KappaResult kappa;
    EnergyResult energy;
    GrowthResult growth;
    bool has_mu = false;
    DominationResult dom1, dom2;

    bool passed = false;
};

struct RunReport {
    int schema_version = 1;
    std::string command;
    nlohmann::ordered_json config_echo;
    std::vector<ScenarioOutcome> scenarios;
    bool passed = false;
};

/// %.17g, with +-inf spelled "inf"/"-inf" (JSON itself has no infinity).
std::string format_double(double v);

/// Deterministic serialization: insertion-ordered keys, 2-space indent,
/// every number printed with format_double, trailing newline.
std::string report_to_json(const RunReport& report);

/// Flat table, one row per scenario, fixed documented column order.
std::string report_to_csv(const RunReport& report);
const std::vector<std::string>& csv_columns();

/// Writes content to path; throws std::runtime_error with the path on
/// failure.
void write_text_file(const std::string& path, const std::string& content);

} // namespace radpot
