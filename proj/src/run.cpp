#include "radpot/run.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "radpot/errors.hpp"
#include "radpot/potentials.hpp"

namespace radpot {

Command command_from_string(const std::string& s)
{
    if (s == "check") return Command::Check;
    if (s == "solve") return Command::Solve;
    if (s == "verify") return Command::Verify;
    if (s == "sweep") return Command::Sweep;
    throw ParameterError("unknown command: " + s);
}

const char* to_string(Command c)
{
    switch (c) {
        case Command::Check: return "check";
        case Command::Solve: return "solve";
        case Command::Verify: return "verify";
        default: return "sweep";
    }
}

namespace {

struct PointParams {
    int n;
    double alpha, q1, q2;
    RadialMeasure sigma;
    std::optional<RadialMeasure> mu1, mu2;
};

PointParams apply_sweep_value(const ScenarioConfig& cfg, const std::string& param, double value)
{
    PointParams p{cfg.n, cfg.alpha, cfg.q1, cfg.q2, cfg.sigma, cfg.mu1, cfg.mu2};
    if (param == "alpha")
        p.alpha = value;
    else if (param == "q1")
        p.q1 = value;
    else if (param == "q2")
        p.q2 = value;
    else if (param == "beta")
        for (auto& piece : p.sigma.pieces) piece.beta = value;
    return p;
}

bool criteria_pass(const CriteriaReport& c)
{
    const bool limc_ok = c.limc[0].classification != LimcClass::Divergent &&
                         c.limc[1].classification != LimcClass::Divergent;
    return c.finpot.flag && c.radialcond.holds && limc_ok && c.con2[0].flag &&
           c.con2[1].flag && c.c114[0].flag && c.c114[1].flag;
}

ScenarioOutcome run_point(const ScenarioConfig& cfg, const PointParams& pp, Command effective)
{
    ScenarioOutcome out;
    out.has_mu = pp.mu1.has_value() || pp.mu2.has_value();

    try {
        out.exps = derive_exponents(pp.n, pp.alpha, pp.q1, pp.q2);
        out.exps_ok = true;
        validate_measure(pp.sigma, pp.n);
    } catch (const ParameterError& e) {
        out.error = e.what();
        out.passed = false;
        return out;
    }

    RadialMeasure combined = pp.sigma;
    if (pp.mu1) combined = add_measures(combined, *pp.mu1);
    if (pp.mu2) combined = add_measures(combined, *pp.mu2);

    const RadialGrid crit_grid = make_criteria_grid(combined, cfg.grid.points);
    out.criteria = run_criteria(pp.sigma, out.exps, crit_grid);
    out.has_criteria = true;
    out.passed = criteria_pass(out.criteria);
    if (effective == Command::Check) return out;

    SolveConfig scfg;
    scfg.grid = RadialGrid::log_spaced(cfg.grid.r_min, cfg.grid.r_max, cfg.grid.points)
                    .with_breakpoints(combined);
    scfg.tol = cfg.solve.tol;
    scfg.max_iter = cfg.solve.max_iter;
    scfg.lambda_search = {cfg.solve.lambda_lo, cfg.solve.lambda_hi, cfg.solve.lambda_steps};

    out.solve_attempted = true;
    try {
        if (out.has_mu) {
            const RadialMeasure zero{};
            out.solve = monotone_solve_inhom(pp.sigma, pp.mu1 ? *pp.mu1 : zero,
                                             pp.mu2 ? *pp.mu2 : zero, out.exps, scfg);
        } else {
            out.solve = monotone_solve(pp.sigma, out.exps, scfg);
        }
        out.solve_ok = true;
        out.u_at_unit = out.solve.u(1.0);
        out.v_at_unit = out.solve.v(1.0);
    } catch (const std::exception& e) {
        out.error = e.what();
        out.solve_ok = false;
    }
    out.passed = out.passed && out.solve_ok && out.solve.converged;
    if (effective == Command::Solve || !out.solve_ok) return out;

    out.verify_attempted = true;
    const RadialMeasure* m1 = pp.mu1 ? &*pp.mu1 : nullptr;
    const RadialMeasure* m2 = pp.mu2 ? &*pp.mu2 : nullptr;
    out.sandwich = verify_sandwich(out.solve, pp.sigma, out.exps, scfg, m1, m2);
    out.profile = verify_profile(out.solve, pp.sigma, out.exps, scfg, m1, m2);

    const double kappa_r =
        cfg.verify.kappa_r > 0.0 ? cfg.verify.kappa_r : out.exps.q1 * out.exps.gamma2;
    out.kappa = kappa_lowerbound_test(pp.sigma, out.exps, kappa_r, crit_grid);

    std::vector<double> energy_radii = cfg.verify.energy_radii;
    if (energy_radii.empty())
        for (int k = -3; k <= 1; ++k) energy_radii.push_back(std::pow(10.0, k));
    out.energy = energy_test(pp.sigma, out.exps, cfg.verify.energy_s, energy_radii);
    out.growth = growth_test(pp.sigma, out.exps, growth_default_centers(pp.sigma),
                             growth_default_radii(pp.sigma));

    out.passed = out.passed && out.sandwich.stable && out.profile.stable &&
                 (out.kappa.skipped || out.kappa.kappa > 0.0);
    if (out.has_mu) {
        out.dom1 = pp.mu1 ? domination_check(*pp.mu1, pp.sigma, out.exps, scfg.grid)
                          : DominationResult{true, 0.0};
        out.dom2 = pp.mu2 ? domination_check(*pp.mu2, pp.sigma, out.exps, scfg.grid)
                          : DominationResult{true, 0.0};
        // Theorem 1.2 hypotheses only bind in the forced case
        out.passed = out.passed && out.dom1.finite && out.dom2.finite &&
                     out.energy.bounded && out.growth.bounded;
    }
    return out;
}

} // namespace

RunReport run_scenario(const ScenarioConfig& cfg, Command command, int jobs)
{
    RunReport report;
    report.command = to_string(command);
    report.config_echo = cfg.echo;

    if (command == Command::Sweep) {
        if (!cfg.sweep.has_value()) {
            ScenarioOutcome out;
            out.error = "sweep command requires a sweep section in the config";
            report.scenarios.push_back(out);
            report.passed = false;
            return report;
        }
        const auto& sw = *cfg.sweep;
        const Command per_point = command_from_string(sw.run);
        const std::size_t count = sw.values.size();
        report.scenarios.resize(count);

        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                const auto pp = apply_sweep_value(cfg, sw.param, sw.values[i]);
                ScenarioOutcome out = run_point(cfg, pp, per_point);
                out.sweep_index = static_cast<int>(i);
                out.sweep_param = sw.param;
                out.sweep_value = sw.values[i];
                report.scenarios[i] = std::move(out);
            }
        };
        const int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
        if (nthreads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        report.passed = true;
        for (const auto& s : report.scenarios) report.passed = report.passed && s.passed;
        return report;
    }

    PointParams pp{cfg.n, cfg.alpha, cfg.q1, cfg.q2, cfg.sigma, cfg.mu1, cfg.mu2};
    report.scenarios.push_back(run_point(cfg, pp, command));
    report.passed = report.scenarios.front().passed;
    return report;
}

} // namespace radpot
