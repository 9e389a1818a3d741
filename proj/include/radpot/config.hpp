#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radpot/measure.hpp"
#include "radpot/solver.hpp"

namespace radpot {

/// Config parsing problems, one message per offending field.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const { return errors_; }
private:
    std::vector<std::string> errors_;
};

struct GridSpec {
    double r_min = 1e-4;
    double r_max = 1e4;
    std::size_t points = 257;
};

struct SolveSpec {
    double tol = 1e-8;
    int max_iter = 200;
    double lambda_lo = 1e-10;
    double lambda_hi = 1e6;
    int lambda_steps = 60;
};

struct SweepSpec {
    std::string param; // one of: beta, alpha, q1, q2
    std::vector<double> values;
    std::string run = "check"; // command applied per sweep point
};

struct VerifySpec {
    double kappa_r = -1.0; // < 0: use q1 * gamma2
    double energy_s = 1.0;
    std::vector<double> energy_radii; // empty: default ladder
};

struct ScenarioConfig {
    int n = 3;
    double alpha = 0.5;
    double q1 = 0.5;
    double q2 = 0.5;
    RadialMeasure sigma;
    std::optional<RadialMeasure> mu1, mu2;
    GridSpec grid;
    SolveSpec solve;
    std::optional<SweepSpec> sweep;
    VerifySpec verify;
    nlohmann::ordered_json echo; // normalized config for report embedding
};

/// Parse and fully validate a config file. Unknown keys are rejected
/// (strict mode); all field errors are collected into a single
/// ConfigError.
ScenarioConfig parse_config(const std::string& path);

/// Same, from already-loaded text (used by tests).
ScenarioConfig parse_config_text(const std::string& text);

/// Measure spec -> RadialMeasure, shared with the per-file parser.
RadialMeasure parse_measure_spec(const nlohmann::json& spec, const std::string& field,
                                 std::vector<std::string>& errors);

} // namespace radpot
