#include "radpot/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace radpot {

using nlohmann::ordered_json;

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

/// A number node that serializes as a raw double, or as the string "inf".
ordered_json num(double v)
{
    if (std::isfinite(v)) return v;
    return format_double(v);
}

void dump_value(const ordered_json& j, std::string& out, int indent);

void dump_object(const ordered_json& j, std::string& out, int indent)
{
    if (j.empty()) {
        out += "{}";
        return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out.append(2 * (indent + 1), ' ');
        out += ordered_json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
    }
    out.append(2 * indent, ' ');
    out += "}";
}

void dump_array(const ordered_json& j, std::string& out, int indent)
{
    if (j.empty()) {
        out += "[]";
        return;
    }
    // scalar-only arrays stay on one line
    bool flat = true;
    for (const auto& e : j)
        if (e.is_object() || e.is_array()) flat = false;
    if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ", ";
            dump_value(j[i], out, indent);
        }
        out += "]";
        return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.append(2 * (indent + 1), ' ');
        dump_value(j[i], out, indent + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
    }
    out.append(2 * indent, ' ');
    out += "]";
}

void dump_value(const ordered_json& j, std::string& out, int indent)
{
    switch (j.type()) {
        case ordered_json::value_t::object: dump_object(j, out, indent); break;
        case ordered_json::value_t::array: dump_array(j, out, indent); break;
        case ordered_json::value_t::number_float: out += format_double(j.get<double>()); break;
        default: out += j.dump(); break;
    }
}

ordered_json samples_json(const std::vector<std::pair<double, double>>& samples)
{
    ordered_json arr = ordered_json::array();
    for (const auto& [x, y] : samples) arr.push_back(ordered_json::array({num(x), num(y)}));
    return arr;
}

ordered_json limc_json(const LimcResult& l)
{
    ordered_json j;
    j["i"] = l.i;
    j["classification"] = to_string(l.classification);
    j["slope"] = num(l.slope);
    j["estimated_limsup"] = num(l.estimated_limsup);
    if (!l.note.empty()) j["note"] = l.note;
    j["samples"] = samples_json(l.samples);
    return j;
}

ordered_json flag_json(const FlagValue& f)
{
    ordered_json j;
    j["holds"] = f.flag;
    j["value"] = num(f.value);
    return j;
}

ordered_json criteria_json(const CriteriaReport& c)
{
    ordered_json j;
    j["finpot"] = flag_json(c.finpot);
    ordered_json rc;
    rc["local_r1"] = flag_json(c.radialcond.local1);
    rc["local_r2"] = flag_json(c.radialcond.local2);
    rc["tail"] = flag_json(c.radialcond.tail);
    rc["holds"] = c.radialcond.holds;
    j["radialcond"] = rc;
    j["limc"] = ordered_json::array({limc_json(c.limc[0]), limc_json(c.limc[1])});
    j["limc_tail_finite"] = c.limc_tail_finite;
    j["con2"] = ordered_json::array({flag_json(c.con2[0]), flag_json(c.con2[1])});
    j["c114"] = ordered_json::array({flag_json(c.c114[0]), flag_json(c.c114[1])});
    return j;
}

ordered_json grid_function_json(const GridFunction& f)
{
    ordered_json j;
    ordered_json radii = ordered_json::array(), values = ordered_json::array();
    for (double r : f.grid().radii()) radii.push_back(num(r));
    for (double v : f.values()) values.push_back(num(v));
    j["radii"] = radii;
    j["values"] = values;
    j["head_exponent"] = num(f.head_exponent());
    j["tail_exponent"] = num(f.tail_exponent());
    return j;
}

ordered_json solve_json(const ScenarioOutcome& s)
{
    ordered_json j;
    j["ok"] = s.solve_ok;
    if (!s.solve_ok) return j;
    j["converged"] = s.solve.converged;
    j["trivial"] = s.solve.trivial;
    j["iterations"] = s.solve.iterations;
    j["lambda_sub"] = num(s.solve.lambda_sub);
    j["lambda_super"] = num(s.solve.lambda_super);
    j["supersolution_found"] = s.solve.supersolution_found;
    j["monotone_violation"] = num(s.solve.monotone_violation);
    j["fixed_point_residual"] = num(s.solve.fixed_point_residual);
    j["u_at_1"] = num(s.u_at_unit);
    j["v_at_1"] = num(s.v_at_unit);
    j["residual_trace"] = samples_json(s.solve.residual_trace);
    j["u"] = grid_function_json(s.solve.u);
    j["v"] = grid_function_json(s.solve.v);
    return j;
}

ordered_json bound_json(const BoundReport& b, bool sandwich)
{
    ordered_json j;
    if (sandwich) {
        j["c_low_u"] = num(b.c_low[0]);
        j["c_low_v"] = num(b.c_low[1]);
        j["c_up_u"] = num(b.c_up[0]);
        j["c_up_v"] = num(b.c_up[1]);
    } else {
        j["low_u"] = num(b.profile_low[0]);
        j["low_v"] = num(b.profile_low[1]);
        j["up_u"] = num(b.profile_up[0]);
        j["up_v"] = num(b.profile_up[1]);
    }
    j["stable"] = b.stable;
    j["trivial"] = b.trivial;
    if (!b.violation.empty()) j["violation"] = b.violation;
    return j;
}

ordered_json verify_json(const ScenarioOutcome& s)
{
    ordered_json j;
    j["sandwich"] = bound_json(s.sandwich, true);
    j["profile"] = bound_json(s.profile, false);
    ordered_json k;
    k["kappa"] = num(s.kappa.kappa);
    k["skipped"] = s.kappa.skipped;
    j["kappa_lowerbound"] = k;
    ordered_json e;
    e["sup"] = num(s.energy.sup);
    e["bounded"] = s.energy.bounded;
    e["ratios"] = samples_json(s.energy.ratios);
    j["energy"] = e;
    ordered_json g;
    g["sup"] = num(s.growth.sup);
    g["bounded"] = s.growth.bounded;
    g["witness_center"] = num(s.growth.witness_center);
    g["witness_radius"] = num(s.growth.witness_radius);
    j["growth"] = g;
    if (s.has_mu) {
        ordered_json d1, d2;
        d1["finite"] = s.dom1.finite;
        d1["constant"] = num(s.dom1.constant);
        d2["finite"] = s.dom2.finite;
        d2["constant"] = num(s.dom2.constant);
        j["domination_mu1"] = d1;
        j["domination_mu2"] = d2;
    }
    return j;
}

ordered_json exps_json(const ExponentSet& e)
{
    ordered_json j;
    j["n"] = e.n;
    j["alpha"] = num(e.alpha);
    j["q1"] = num(e.q1);
    j["q2"] = num(e.q2);
    j["gamma1"] = num(e.gamma1);
    j["gamma2"] = num(e.gamma2);
    j["r1"] = num(e.r1);
    j["r2"] = num(e.r2);
    j["d"] = num(e.d);
    return j;
}

ordered_json scenario_json(const ScenarioOutcome& s)
{
    ordered_json j;
    if (s.sweep_index >= 0) {
        j["index"] = s.sweep_index;
        j["param"] = s.sweep_param;
        j["value"] = num(s.sweep_value);
    }
    if (s.exps_ok) j["exponents"] = exps_json(s.exps);
    if (!s.error.empty()) j["error"] = s.error;
    if (s.has_criteria) j["criteria"] = criteria_json(s.criteria);
    if (s.solve_attempted) j["solve"] = solve_json(s);
    if (s.verify_attempted) j["verify"] = verify_json(s);
    j["passed"] = s.passed;
    return j;
}

} // namespace

std::string report_to_json(const RunReport& report)
{
    ordered_json j;
    j["schema_version"] = report.schema_version;
    j["command"] = report.command;
    j["config"] = report.config_echo;
    ordered_json arr = ordered_json::array();
    for (const auto& s : report.scenarios) arr.push_back(scenario_json(s));
    j["scenarios"] = arr;
    j["passed"] = report.passed;

    std::string out;
    dump_value(j, out, 0);
    out += "\n";
    return out;
}

const std::vector<std::string>& csv_columns()
{
    static const std::vector<std::string> cols = {
        "index", "param", "value", "n", "alpha", "q1", "q2", "gamma1", "gamma2", "r1", "r2",
        "d", "error", "finpot", "finpot_tail", "radialcond", "local_r1", "local_r2",
        "tail_moment", "limc1", "limc2", "limc1_limsup", "limc2_limsup", "con2_1", "con2_1_c",
        "con2_2", "con2_2_c", "c114_1", "c114_1_c", "c114_2", "c114_2_c", "solved",
        "converged", "iterations", "lambda_sub", "lambda_super", "fp_residual",
        "monotone_violation", "u_at_1", "v_at_1", "sandwich_stable", "c_low_u", "c_low_v",
        "c_up_u", "c_up_v", "profile_stable", "profile_low_u", "profile_low_v",
        "profile_up_u", "profile_up_v", "kappa", "energy_sup", "energy_bounded",
        "growth_sup", "growth_bounded", "dom1_C", "dom2_C", "passed"};
    return cols;
}

std::string report_to_csv(const RunReport& report)
{
    std::ostringstream os;
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ",";
        os << cols[i];
    }
    os << "\n";

    for (const auto& s : report.scenarios) {
        std::vector<std::string> row(cols.size());
        auto set = [&](const std::string& name, const std::string& v) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (cols[i] == name) {
                    row[i] = v;
                    return;
                }
        };
        auto setd = [&](const std::string& name, double v) { set(name, format_double(v)); };
        auto setb = [&](const std::string& name, bool v) { set(name, v ? "1" : "0"); };

        if (s.sweep_index >= 0) {
            set("index", std::to_string(s.sweep_index));
            set("param", s.sweep_param);
            setd("value", s.sweep_value);
        }
        if (!s.error.empty()) set("error", "\"" + s.error + "\"");
        if (s.exps_ok) {
            set("n", std::to_string(s.exps.n));
            setd("alpha", s.exps.alpha);
            setd("q1", s.exps.q1);
            setd("q2", s.exps.q2);
            setd("gamma1", s.exps.gamma1);
            setd("gamma2", s.exps.gamma2);
            setd("r1", s.exps.r1);
            setd("r2", s.exps.r2);
            setd("d", s.exps.d);
        }
        if (s.has_criteria) {
            setb("finpot", s.criteria.finpot.flag);
            setd("finpot_tail", s.criteria.finpot.value);
            setb("radialcond", s.criteria.radialcond.holds);
            setb("local_r1", s.criteria.radialcond.local1.flag);
            setb("local_r2", s.criteria.radialcond.local2.flag);
            setd("tail_moment", s.criteria.radialcond.tail.value);
            set("limc1", to_string(s.criteria.limc[0].classification));
            set("limc2", to_string(s.criteria.limc[1].classification));
            setd("limc1_limsup", s.criteria.limc[0].estimated_limsup);
            setd("limc2_limsup", s.criteria.limc[1].estimated_limsup);
            setb("con2_1", s.criteria.con2[0].flag);
            setd("con2_1_c", s.criteria.con2[0].value);
            setb("con2_2", s.criteria.con2[1].flag);
            setd("con2_2_c", s.criteria.con2[1].value);
            setb("c114_1", s.criteria.c114[0].flag);
            setd("c114_1_c", s.criteria.c114[0].value);
            setb("c114_2", s.criteria.c114[1].flag);
            setd("c114_2_c", s.criteria.c114[1].value);
        }
        if (s.solve_attempted) {
            setb("solved", s.solve_ok);
            if (s.solve_ok) {
                setb("converged", s.solve.converged);
                set("iterations", std::to_string(s.solve.iterations));
                setd("lambda_sub", s.solve.lambda_sub);
                setd("lambda_super", s.solve.lambda_super);
                setd("fp_residual", s.solve.fixed_point_residual);
                setd("monotone_violation", s.solve.monotone_violation);
                setd("u_at_1", s.u_at_unit);
                setd("v_at_1", s.v_at_unit);
            }
        }
        if (s.verify_attempted) {
            setb("sandwich_stable", s.sandwich.stable);
            setd("c_low_u", s.sandwich.c_low[0]);
            setd("c_low_v", s.sandwich.c_low[1]);
            setd("c_up_u", s.sandwich.c_up[0]);
            setd("c_up_v", s.sandwich.c_up[1]);
            setb("profile_stable", s.profile.stable);
            setd("profile_low_u", s.profile.profile_low[0]);
            setd("profile_low_v", s.profile.profile_low[1]);
            setd("profile_up_u", s.profile.profile_up[0]);
            setd("profile_up_v", s.profile.profile_up[1]);
            if (!s.kappa.skipped) setd("kappa", s.kappa.kappa);
            setd("energy_sup", s.energy.sup);
            setb("energy_bounded", s.energy.bounded);
            setd("growth_sup", s.growth.sup);
            setb("growth_bounded", s.growth.bounded);
            if (s.has_mu) {
                setd("dom1_C", s.dom1.constant);
                setd("dom2_C", s.dom2.constant);
            }
        }
        setb("passed", s.passed);

        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << "\n";
    }
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace radpot
