#include "radpot/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "radpot/errors.hpp"
#include "radpot/exponents.hpp"

namespace radpot {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << "; ";
        os << v[i];
    }
    return os.str();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& field, std::vector<std::string>& errors)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            errors.push_back(field + ": unknown key \"" + it.key() + "\"");
}

double get_number(const json& obj, const std::string& key, const std::string& field,
                  std::vector<std::string>& errors, bool required, double fallback)
{
    if (!obj.contains(key)) {
        if (required) errors.push_back(field + "." + key + ": required");
        return fallback;
    }
    if (!obj[key].is_number()) {
        errors.push_back(field + "." + key + ": must be a number");
        return fallback;
    }
    return obj[key].get<double>();
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error("config error: " + join(errors)), errors_(std::move(errors))
{
}

RadialMeasure parse_measure_spec(const json& spec, const std::string& field,
                                 std::vector<std::string>& errors)
{
    RadialMeasure m;
    if (!spec.is_array()) {
        errors.push_back(field + ": must be an array of components");
        return m;
    }
    int idx = 0;
    for (const auto& comp : spec) {
        const std::string at = field + "[" + std::to_string(idx++) + "]";
        if (!comp.is_object() || comp.size() != 1) {
            errors.push_back(at + ": each component is a one-key object");
            continue;
        }
        const std::string kind = comp.begin().key();
        const json& body = comp.begin().value();
        if (kind == "power") {
            reject_unknown(body, {"c", "beta", "a", "b"}, at + ".power", errors);
            PowerPiece p;
            p.coeff = get_number(body, "c", at + ".power", errors, true, 0.0);
            p.beta = get_number(body, "beta", at + ".power", errors, true, 0.0);
            p.inner = get_number(body, "a", at + ".power", errors, false, 0.0);
            if (body.contains("b")) {
                if (body["b"].is_string()) {
                    if (body["b"].get<std::string>() == "inf")
                        p.outer = kInf;
                    else
                        errors.push_back(at + ".power.b: must be a number or \"inf\"");
                } else if (body["b"].is_number()) {
                    p.outer = body["b"].get<double>();
                } else {
                    errors.push_back(at + ".power.b: must be a number or \"inf\"");
                }
            }
            m.pieces.push_back(p);
        } else if (kind == "shell") {
            reject_unknown(body, {"rho", "m"}, at + ".shell", errors);
            ShellAtom a;
            a.radius = get_number(body, "rho", at + ".shell", errors, true, 1.0);
            a.mass = get_number(body, "m", at + ".shell", errors, true, 0.0);
            m.atoms.push_back(a);
        } else if (kind == "origin") {
            reject_unknown(body, {"m0"}, at + ".origin", errors);
            m.origin_mass += get_number(body, "m0", at + ".origin", errors, true, 0.0);
        } else {
            errors.push_back(at + ": unknown component \"" + kind + "\"");
        }
    }
    return m;
}

ScenarioConfig parse_config_text(const std::string& text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("not valid JSON: ") + e.what()});
    }
    std::vector<std::string> errors;
    if (!root.is_object()) throw ConfigError({"top level must be an object"});

    reject_unknown(root,
                   {"exponents", "sigma", "mu1", "mu2", "grid", "solve", "sweep", "verify",
                    "schema_version"},
                   "config", errors);

    ScenarioConfig cfg;

    if (!root.contains("exponents")) {
        errors.push_back("exponents: required");
    } else {
        const json& e = root["exponents"];
        reject_unknown(e, {"n", "alpha", "q1", "q2"}, "exponents", errors);
        const double n_raw = get_number(e, "n", "exponents", errors, true, 3.0);
        if (n_raw != std::floor(n_raw))
            errors.push_back("exponents.n: must be an integer");
        cfg.n = static_cast<int>(n_raw);
        cfg.alpha = get_number(e, "alpha", "exponents", errors, true, 0.5);
        cfg.q1 = get_number(e, "q1", "exponents", errors, true, 0.5);
        cfg.q2 = get_number(e, "q2", "exponents", errors, true, 0.5);
    }

    if (!root.contains("sigma"))
        errors.push_back("sigma: required");
    else
        cfg.sigma = parse_measure_spec(root["sigma"], "sigma", errors);
    if (root.contains("mu1")) cfg.mu1 = parse_measure_spec(root["mu1"], "mu1", errors);
    if (root.contains("mu2")) cfg.mu2 = parse_measure_spec(root["mu2"], "mu2", errors);

    if (root.contains("grid")) {
        const json& g = root["grid"];
        reject_unknown(g, {"r_min", "r_max", "points"}, "grid", errors);
        cfg.grid.r_min = get_number(g, "r_min", "grid", errors, false, cfg.grid.r_min);
        cfg.grid.r_max = get_number(g, "r_max", "grid", errors, false, cfg.grid.r_max);
        const double pts = get_number(g, "points", "grid", errors, false,
                                      static_cast<double>(cfg.grid.points));
        cfg.grid.points = static_cast<std::size_t>(pts);
        if (!(cfg.grid.r_min > 0.0)) errors.push_back("grid.r_min: must be positive");
        if (!(cfg.grid.r_max > cfg.grid.r_min)) errors.push_back("grid.r_max: must exceed r_min");
        if (cfg.grid.points < 8) errors.push_back("grid.points: must be at least 8");
    }

    if (root.contains("solve")) {
        const json& s = root["solve"];
        reject_unknown(s, {"tol", "max_iter", "lambda_lo", "lambda_hi", "lambda_steps"}, "solve",
                       errors);
        cfg.solve.tol = get_number(s, "tol", "solve", errors, false, cfg.solve.tol);
        cfg.solve.max_iter = static_cast<int>(
            get_number(s, "max_iter", "solve", errors, false, cfg.solve.max_iter));
        cfg.solve.lambda_lo =
            get_number(s, "lambda_lo", "solve", errors, false, cfg.solve.lambda_lo);
        cfg.solve.lambda_hi =
            get_number(s, "lambda_hi", "solve", errors, false, cfg.solve.lambda_hi);
        cfg.solve.lambda_steps = static_cast<int>(
            get_number(s, "lambda_steps", "solve", errors, false, cfg.solve.lambda_steps));
        if (!(cfg.solve.tol > 0.0)) errors.push_back("solve.tol: must be positive");
        if (cfg.solve.max_iter < 1) errors.push_back("solve.max_iter: must be positive");
        if (!(cfg.solve.lambda_lo < cfg.solve.lambda_hi))
            errors.push_back("solve.lambda_lo: must be below lambda_hi");
    }

    if (root.contains("sweep")) {
        const json& s = root["sweep"];
        reject_unknown(s, {"param", "values", "from", "to", "step", "run"}, "sweep", errors);
        SweepSpec sw;
        if (!s.contains("param") || !s["param"].is_string())
            errors.push_back("sweep.param: required string");
        else
            sw.param = s["param"].get<std::string>();
        if (sw.param != "beta" && sw.param != "alpha" && sw.param != "q1" && sw.param != "q2" &&
            !sw.param.empty())
            errors.push_back("sweep.param: must be one of beta, alpha, q1, q2");
        if (s.contains("values")) {
            if (!s["values"].is_array())
                errors.push_back("sweep.values: must be an array of numbers");
            else
                for (const auto& v : s["values"]) {
                    if (!v.is_number())
                        errors.push_back("sweep.values: must be an array of numbers");
                    else
                        sw.values.push_back(v.get<double>());
                }
        } else {
            const double from = get_number(s, "from", "sweep", errors, true, 0.0);
            const double to = get_number(s, "to", "sweep", errors, true, 1.0);
            const double step = get_number(s, "step", "sweep", errors, true, 0.1);
            if (step <= 0.0)
                errors.push_back("sweep.step: must be positive");
            else
                for (double v = from; v <= to + 0.5 * step; v += step) sw.values.push_back(v);
        }
        if (s.contains("run")) {
            if (!s["run"].is_string())
                errors.push_back("sweep.run: must be a string");
            else
                sw.run = s["run"].get<std::string>();
            if (sw.run != "check" && sw.run != "solve" && sw.run != "verify")
                errors.push_back("sweep.run: must be one of check, solve, verify");
        }
        if (sw.values.empty()) errors.push_back("sweep: produced no values");
        cfg.sweep = std::move(sw);
    }

    if (root.contains("verify")) {
        const json& v = root["verify"];
        reject_unknown(v, {"kappa_r", "energy_s", "energy_radii"}, "verify", errors);
        cfg.verify.kappa_r = get_number(v, "kappa_r", "verify", errors, false, -1.0);
        cfg.verify.energy_s = get_number(v, "energy_s", "verify", errors, false, 1.0);
        if (v.contains("energy_radii")) {
            if (!v["energy_radii"].is_array())
                errors.push_back("verify.energy_radii: must be an array");
            else
                for (const auto& r : v["energy_radii"])
                    if (r.is_number()) cfg.verify.energy_radii.push_back(r.get<double>());
        }
        if (!(cfg.verify.energy_s > 0.0)) errors.push_back("verify.energy_s: must be positive");
    }

    // domain validation through the same code paths the library uses
    if (errors.empty()) {
        try {
            (void)derive_exponents(cfg.n, cfg.alpha, cfg.q1, cfg.q2);
        } catch (const ParameterError& e) {
            errors.push_back(std::string("exponents: ") + e.what());
        }
        try {
            validate_measure(cfg.sigma, cfg.n);
        } catch (const ParameterError& e) {
            errors.push_back(std::string("sigma: ") + e.what());
        }
        for (const auto* mu : {&cfg.mu1, &cfg.mu2}) {
            if (!mu->has_value()) continue;
            try {
                validate_measure(**mu, cfg.n);
            } catch (const ParameterError& e) {
                errors.push_back(std::string(mu == &cfg.mu1 ? "mu1: " : "mu2: ") + e.what());
            }
        }
    }
    if (!errors.empty()) throw ConfigError(std::move(errors));

    cfg.echo = nlohmann::ordered_json::parse(text);
    return cfg;
}

ScenarioConfig parse_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace radpot
