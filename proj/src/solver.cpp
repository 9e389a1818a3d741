#include "radpot/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radpot/errors.hpp"
#include "radpot/potentials.hpp"
#include "radpot/verify.hpp"

namespace radpot {

namespace {

constexpr double kOverflowGuard = 1e300;
constexpr double kIneqSlack = 1e-14;       // rounding slack on calibration inequalities
constexpr double kMonotoneGuard = 1e-8;    // beyond this relative drop => inconsistency

std::vector<double> comparable_on_grid(const RadialMeasure& sigma, const ExponentSet& exps,
                                       const RadialGrid& grid)
{
    std::vector<double> a(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        a[i] = riesz_comparable(sigma, exps, grid[i]);
        if (!std::isfinite(a[i]))
            throw SeedError("A sigma is infinite at radius " + std::to_string(grid[i]),
                            grid[i]);
    }
    return a;
}

std::vector<double> powed(const std::vector<double>& v, double p)
{
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::pow(v[i], p);
    return out;
}

double log_bisect_largest(double lo, double hi, int steps,
                          const std::function<bool(double)>& ok)
{
    // invariant: ok(lo), !ok(hi)
    for (int k = 0; k < steps; ++k) {
        const double mid = std::sqrt(lo * hi);
        if (ok(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

struct IterationOutcome {
    std::vector<double> u, v;
    int iterations = 0;
    bool converged = false;
    std::vector<std::pair<double, double>> trace;
    double monotone_violation = 0.0;
    double fixed_point_residual = 0.0;
};

double sup_norm(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

/// One half-step of the system map: I(w^q d sigma) + forcing on the grid.
std::vector<double> half_step(const RadialMeasure& sigma, const ExponentSet& exps,
                              const RadialGrid& grid, const std::vector<double>& w_vals,
                              double q, const std::vector<double>& forcing,
                              bool exact_kernel)
{
    GridFunction w(grid, w_vals, -(exps.d + 1.0), 0.0);
    std::vector<double> out;
    if (exact_kernel) {
        out.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            out[i] = weighted_potential_exact(sigma, w, q, exps, grid[i]);
    } else {
        out = weighted_potential_on_grid(sigma, w, q, exps);
    }
    if (!forcing.empty())
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += forcing[i];
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!(out[i] < kOverflowGuard) || !std::isfinite(out[i]))
            throw DivergenceError("iterate exceeded the overflow guard at radius " +
                                      std::to_string(grid[i]),
                                  grid[i]);
    }
    return out;
}

IterationOutcome iterate_system(const RadialMeasure& sigma, const ExponentSet& exps,
                                const SolveConfig& cfg, std::vector<double> u,
                                std::vector<double> v, const std::vector<double>& f1,
                                const std::vector<double>& f2)
{
    IterationOutcome out;
    const RadialGrid& grid = cfg.grid;
    double worst_drop = 0.0;
    for (int it = 1; it <= cfg.max_iter; ++it) {
        std::vector<double> u_next =
            half_step(sigma, exps, grid, v, exps.q1, f1, cfg.exact_kernel);
        std::vector<double> v_next =
            half_step(sigma, exps, grid, u, exps.q2, f2, cfg.exact_kernel);
        double res_u = 0.0, res_v = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double du = (u_next[i] - u[i]) / std::max(u_next[i], 1e-300);
            const double dv = (v_next[i] - v[i]) / std::max(v_next[i], 1e-300);
            res_u = std::max(res_u, std::abs(du));
            res_v = std::max(res_v, std::abs(dv));
            worst_drop = std::min({worst_drop, du, dv});
        }
        u = std::move(u_next);
        v = std::move(v_next);
        out.trace.emplace_back(res_u, res_v);
        out.iterations = it;
        if (worst_drop < -kMonotoneGuard)
            throw std::runtime_error("monotone iteration decreased by " +
                                     std::to_string(-worst_drop) + " (relative)");
        if (res_u < cfg.tol && res_v < cfg.tol) {
            out.converged = true;
            break;
        }
    }
    out.monotone_violation = -worst_drop;

    const std::vector<double> map_u =
        half_step(sigma, exps, grid, v, exps.q1, f1, cfg.exact_kernel);
    std::vector<double> diff(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) diff[i] = map_u[i] - u[i];
    const double un = sup_norm(u);
    out.fixed_point_residual = (un > 0.0) ? sup_norm(diff) / un : 0.0;

    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

SolveResult zero_result(const SolveConfig& cfg)
{
    SolveResult res;
    std::vector<double> zeros(cfg.grid.size(), 0.0);
    res.u = GridFunction(cfg.grid, zeros);
    res.v = GridFunction(cfg.grid, zeros);
    res.iterations = 1;
    res.converged = true;
    res.trivial = true;
    res.lambda_sub = cfg.lambda_search.hi;
    res.residual_trace.emplace_back(0.0, 0.0);
    return res;
}

SolveResult solve_common(const RadialMeasure& sigma, const RadialMeasure& mu1,
                         const RadialMeasure& mu2, const ExponentSet& exps,
                         const SolveConfig& cfg, const std::vector<double>& f1,
                         const std::vector<double>& f2)
{
    SolveResult res;
    res.lambda_sub =
        calibrate_lambda_sub(sigma, exps, cfg.grid, cfg.lambda_search, cfg.exact_kernel);
    auto [u0, v0] = subsolution_seed(sigma, exps, res.lambda_sub, cfg.grid);
    auto outcome = iterate_system(sigma, exps, cfg, u0.values(), v0.values(), f1, f2);

    res.u = GridFunction(cfg.grid, std::move(outcome.u), -(exps.d + 1.0), 0.0);
    res.v = GridFunction(cfg.grid, std::move(outcome.v), -(exps.d + 1.0), 0.0);
    res.iterations = outcome.iterations;
    res.converged = outcome.converged;
    res.residual_trace = std::move(outcome.trace);
    res.monotone_violation = outcome.monotone_violation;
    res.fixed_point_residual = outcome.fixed_point_residual;

    const auto super = supersolution_check(sigma, mu1, mu2, exps, cfg.grid, cfg.lambda_search);
    res.supersolution_found = super.found;
    res.lambda_super = super.lambda;
    return res;
}

} // namespace

std::pair<GridFunction, GridFunction> subsolution_seed(const RadialMeasure& sigma,
                                                       const ExponentSet& exps, double lambda,
                                                       const RadialGrid& grid)
{
    if (lambda < 0.0) throw ParameterError("subsolution seed requires lambda >= 0");
    const auto a = comparable_on_grid(sigma, exps, grid);
    std::vector<double> u(a.size()), v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        u[i] = lambda * std::pow(a[i], exps.gamma1);
        v[i] = lambda * std::pow(a[i], exps.gamma2);
    }
    const double clamp_lo = -(exps.d + 1.0);
    return {GridFunction(grid, std::move(u), clamp_lo, 0.0),
            GridFunction(grid, std::move(v), clamp_lo, 0.0)};
}

double calibrate_lambda_sub(const RadialMeasure& sigma, const ExponentSet& exps,
                            const RadialGrid& grid, const LambdaSearch& search,
                            bool exact_kernel)
{
    if (sigma.is_zero()) return search.hi; // vacuous
    const auto a = comparable_on_grid(sigma, exps, grid);
    const double clamp_lo = -(exps.d + 1.0);
    GridFunction a_g1(grid, powed(a, exps.gamma1), clamp_lo, 0.0);
    GridFunction a_g2(grid, powed(a, exps.gamma2), clamp_lo, 0.0);
    // I((lambda A^g2)^q1 d sigma) = lambda^q1 * I((A^g2)^q1 d sigma): the
    // base potentials are computed once, the lattice scan just rescales.
    auto base_potential = [&](const GridFunction& w, double q) {
        if (!exact_kernel) return weighted_potential_on_grid(sigma, w, q, exps);
        std::vector<double> out(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            out[i] = weighted_potential_exact(sigma, w, q, exps, grid[i]);
        return out;
    };
    const auto base1 = base_potential(a_g2, exps.q1);
    const auto base2 = base_potential(a_g1, exps.q2);

    auto is_subsolution = [&](double lambda) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double u_i = lambda * a_g1.values()[i];
            const double v_i = lambda * a_g2.values()[i];
            const double iu = std::pow(lambda, exps.q1) * base1[i];
            const double iv = std::pow(lambda, exps.q2) * base2[i];
            if (u_i > iu * (1.0 + kIneqSlack) || v_i > iv * (1.0 + kIneqSlack)) return false;
        }
        return true;
    };

    if (is_subsolution(search.hi)) return search.hi;
    if (!is_subsolution(search.lo))
        throw CalibrationError(
            "no lambda in the search range yields a subsolution (criteria/grid mismatch?)");
    return log_bisect_largest(search.lo, search.hi, search.steps, is_subsolution);
}

SupersolutionResult supersolution_check(const RadialMeasure& sigma, const RadialMeasure& mu1,
                                        const RadialMeasure& mu2, const ExponentSet& exps,
                                        const RadialGrid& grid, const LambdaSearch& search)
{
    std::vector<double> s1(grid.size()), s2(grid.size()), f1(grid.size()), f2(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = riesz_comparable(sigma, exps, grid[i]);
        const double am1 = riesz_comparable(mu1, exps, grid[i]);
        const double am2 = riesz_comparable(mu2, exps, grid[i]);
        if (!std::isfinite(a) || !std::isfinite(am1) || !std::isfinite(am2))
            return {false, 0.0};
        s1[i] = a + std::pow(a, exps.gamma1);
        s2[i] = a + std::pow(a, exps.gamma2);
        f1[i] = am1;
        f2[i] = am2;
    }
    const double clamp_lo = -(exps.d + 1.0);

    std::vector<double> base1, base2;
    if (!sigma.is_zero()) {
        GridFunction s1_g(grid, s1, clamp_lo, 0.0);
        GridFunction s2_g(grid, s2, clamp_lo, 0.0);
        base1 = weighted_potential_on_grid(sigma, s2_g, exps.q1, exps);
        base2 = weighted_potential_on_grid(sigma, s1_g, exps.q2, exps);
    } else {
        base1.assign(grid.size(), 0.0);
        base2.assign(grid.size(), 0.0);
    }

    auto is_supersolution = [&](double lambda) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double lhs1 = std::pow(lambda, exps.q1) * base1[i] + f1[i];
            const double lhs2 = std::pow(lambda, exps.q2) * base2[i] + f2[i];
            if (lhs1 > lambda * s1[i] * (1.0 + kIneqSlack) ||
                lhs2 > lambda * s2[i] * (1.0 + kIneqSlack))
                return false;
        }
        return true;
    };

    if (!is_supersolution(search.hi)) return {false, 0.0};
    if (is_supersolution(search.lo)) return {true, search.lo};
    // smallest workable lambda: bisect on the complement
    double lo = search.lo, hi = search.hi;
    for (int k = 0; k < search.steps; ++k) {
        const double mid = std::sqrt(lo * hi);
        if (is_supersolution(mid))
            hi = mid;
        else
            lo = mid;
    }
    return {true, hi};
}

SolveResult monotone_solve(const RadialMeasure& sigma, const ExponentSet& exps,
                           const SolveConfig& cfg)
{
    validate_measure(sigma, exps.n);
    if (sigma.is_zero()) return zero_result(cfg);
    const RadialMeasure zero{};
    return solve_common(sigma, zero, zero, exps, cfg, {}, {});
}

SolveResult monotone_solve_inhom(const RadialMeasure& sigma, const RadialMeasure& mu1,
                                 const RadialMeasure& mu2, const ExponentSet& exps,
                                 const SolveConfig& cfg)
{
    validate_measure(sigma, exps.n);
    validate_measure(mu1, exps.n);
    validate_measure(mu2, exps.n);
    if (sigma.is_zero() && mu1.is_zero() && mu2.is_zero()) return zero_result(cfg);

    for (const RadialMeasure* mu : {&mu1, &mu2}) {
        if (mu->is_zero()) continue;
        const auto dom = domination_check(*mu, sigma, exps, cfg.grid);
        if (!dom.finite)
            throw DominationError("I_{2a} mu is not dominated by I_{2a} sigma (sup ratio " +
                                      std::to_string(dom.constant) + ")",
                                  dom.constant);
    }

    std::vector<double> f1(cfg.grid.size()), f2(cfg.grid.size());
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
        f1[i] = riesz_comparable(mu1, exps, cfg.grid[i]);
        f2[i] = riesz_comparable(mu2, exps, cfg.grid[i]);
        if (!std::isfinite(f1[i]) || !std::isfinite(f2[i]))
            throw SeedError("A mu is infinite at radius " + std::to_string(cfg.grid[i]),
                            cfg.grid[i]);
    }
    return solve_common(sigma, mu1, mu2, exps, cfg, f1, f2);
}

} // namespace radpot
