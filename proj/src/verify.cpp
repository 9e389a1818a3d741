#include "radpot/verify.hpp"

#include <algorithm>
#include <cmath>

#include "radpot/errors.hpp"
#include "radpot/potentials.hpp"

namespace radpot {

namespace {

constexpr double kStability = 0.10;

struct SandwichConstants {
    std::array<double, 2> low{}, up{};
    std::string violation;
};

SandwichConstants sandwich_on(const SolveResult& res, const RadialMeasure& sigma,
                              const ExponentSet& exps)
{
    SandwichConstants sc;
    const auto& grid = res.u.grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = riesz_comparable(sigma, exps, grid[i]);
        const std::array<double, 2> comp = {res.u.values()[i], res.v.values()[i]};
        for (int c = 0; c < 2; ++c) {
            const double g = (c == 0) ? exps.gamma1 : exps.gamma2;
            const double ag = std::pow(a, g);
            if (comp[c] <= 0.0) {
                if (a > 0.0)
                    sc.violation = "component vanishes at radius " + std::to_string(grid[i]) +
                                   " while A sigma is positive";
                continue;
            }
            sc.low[c] = std::max(sc.low[c], ag / comp[c]);
            sc.up[c] = std::max(sc.up[c], comp[c] / (a + ag));
        }
    }
    return sc;
}

struct ProfileConstants {
    std::array<double, 2> low{}, up{};
    std::string violation;
};

ProfileConstants profile_on(const SolveResult& res, const RadialMeasure& sigma,
                            const ExponentSet& exps)
{
    ProfileConstants pc;
    pc.up = {kInf, kInf};
    std::array<double, 2> sup{}, inf{kInf, kInf};
    const auto& grid = res.u.grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double tail = moment(sigma, exps.d, grid[i], kInf, exps.n);
        const std::array<double, 2> comp = {res.u.values()[i], res.v.values()[i]};
        for (int c = 0; c < 2; ++c) {
            const double g = (c == 0) ? exps.gamma1 : exps.gamma2;
            const double profile =
                k_potential(sigma, exps, c + 1, grid[i]) + std::pow(tail, g);
            if (profile <= 0.0) {
                if (comp[c] > 0.0)
                    pc.violation = "profile vanishes at radius " + std::to_string(grid[i]);
                continue;
            }
            const double ratio = comp[c] / profile;
            sup[c] = std::max(sup[c], ratio);
            inf[c] = std::min(inf[c], ratio);
        }
    }
    pc.up = sup;
    pc.low = inf;
    return pc;
}

SolveResult resolve_on(const RadialMeasure& sigma, const ExponentSet& exps,
                       const SolveConfig& cfg, const RadialMeasure* mu1,
                       const RadialMeasure* mu2)
{
    SolveConfig fine = cfg;
    fine.grid = cfg.grid.refined();
    if (mu1 || mu2) {
        const RadialMeasure zero{};
        return monotone_solve_inhom(sigma, mu1 ? *mu1 : zero, mu2 ? *mu2 : zero, exps, fine);
    }
    return monotone_solve(sigma, exps, fine);
}

bool close_rel(double a, double b, double tol)
{
    if (a == b) return true;
    if (!std::isfinite(a) || !std::isfinite(b)) return false;
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

} // namespace

BoundReport verify_sandwich(const SolveResult& result, const RadialMeasure& sigma,
                            const ExponentSet& exps, const SolveConfig& cfg,
                            const RadialMeasure* mu1, const RadialMeasure* mu2)
{
    BoundReport rep;
    if (result.trivial || sigma.is_zero()) {
        rep.trivial = true;
        rep.stable = true;
        return rep;
    }
    const auto coarse = sandwich_on(result, sigma, exps);
    rep.c_low = coarse.low;
    rep.c_up = coarse.up;
    rep.violation = coarse.violation;

    const auto fine_res = resolve_on(sigma, exps, cfg, mu1, mu2);
    const auto fine = sandwich_on(fine_res, sigma, exps);
    rep.stable = true;
    for (int c = 0; c < 2; ++c)
        rep.stable = rep.stable && close_rel(coarse.low[c], fine.low[c], kStability) &&
                     close_rel(coarse.up[c], fine.up[c], kStability);
    rep.stable = rep.stable && rep.violation.empty();
    return rep;
}

BoundReport verify_profile(const SolveResult& result, const RadialMeasure& sigma,
                           const ExponentSet& exps, const SolveConfig& cfg,
                           const RadialMeasure* mu1, const RadialMeasure* mu2)
{
    BoundReport rep;
    if (result.trivial || sigma.is_zero()) {
        rep.trivial = true;
        rep.stable = true;
        return rep;
    }
    const auto coarse = profile_on(result, sigma, exps);
    rep.profile_low = coarse.low;
    rep.profile_up = coarse.up;
    rep.violation = coarse.violation;

    const auto fine_res = resolve_on(sigma, exps, cfg, mu1, mu2);
    const auto fine = profile_on(fine_res, sigma, exps);
    rep.stable = true;
    for (int c = 0; c < 2; ++c)
        rep.stable = rep.stable && close_rel(coarse.low[c], fine.low[c], kStability) &&
                     close_rel(coarse.up[c], fine.up[c], kStability);
    rep.stable = rep.stable && rep.violation.empty();
    return rep;
}

KappaResult kappa_lowerbound_test(const RadialMeasure& sigma, const ExponentSet& exps,
                                  double r, const RadialGrid& grid)
{
    if (r < 1e-3) return {0.0, true};
    if (sigma.is_zero()) return {0.0, true};
    std::vector<double> a(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        a[i] = riesz_comparable(sigma, exps, grid[i]);
        if (!std::isfinite(a[i]))
            throw SeedError("A sigma is infinite at radius " + std::to_string(grid[i]),
                            grid[i]);
    }
    GridFunction w(grid, a, -(exps.d + 1.0), 0.0);
    const auto lhs = weighted_potential_on_grid(sigma, w, r, exps);
    double kappa = kInf;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(a[i] > 0.0)) continue;
        const double ratio = lhs[i] / std::pow(a[i], r + 1.0);
        kappa = std::min(kappa, std::pow(ratio, 1.0 / r));
    }
    return {kappa, false};
}

EnergyResult energy_test(const RadialMeasure& sigma, const ExponentSet& exps, double s,
                         const std::vector<double>& R_list)
{
    if (!(s > 0.0)) throw ParameterError("energy_test requires s > 0");
    EnergyResult out;
    for (double R : R_list) {
        const double denom = ball_mass(sigma, R, exps.n);
        if (!(denom > 0.0)) continue;
        const RadialMeasure sig_r = restrict_to_ball(sigma, R);
        double lo = R * 1e-7;
        const double mp = sig_r.min_positive_support();
        if (std::isfinite(mp) && mp > 0.0) lo = std::min(lo, 0.5 * mp);
        const auto grid = RadialGrid::log_spaced(lo, R, 97).with_breakpoints(sig_r);
        GridFunction a_r = GridFunction::sample(
            grid, [&](double x) { return riesz_comparable(sig_r, exps, x); },
            -(exps.d + 1.0), 0.0);
        const double num = weighted_moment(sig_r, a_r, s, 0.0, 0.0, R, exps.n);
        out.ratios.emplace_back(R, num / denom);
    }
    for (const auto& [R, ratio] : out.ratios) out.sup = std::max(out.sup, ratio);

    bool any_inf = !std::isfinite(out.sup);
    // slope of log ratio vs log R over the smallest R's: growth toward
    // R -> 0 is the capacity-condition failure signature
    std::vector<std::pair<double, double>> pts;
    for (const auto& [R, ratio] : out.ratios)
        if (std::isfinite(ratio) && ratio > 0.0) pts.emplace_back(std::log(R), std::log(ratio));
    std::sort(pts.begin(), pts.end());
    double slope = 0.0;
    if (pts.size() >= 2) {
        const std::size_t m = std::min<std::size_t>(4, pts.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t k = 0; k < m; ++k) {
            sx += pts[k].first;
            sy += pts[k].second;
            sxx += pts[k].first * pts[k].first;
            sxy += pts[k].first * pts[k].second;
        }
        const double den = m * sxx - sx * sx;
        if (den != 0.0) slope = (m * sxy - sx * sy) / den;
    }
    out.bounded = !any_inf && slope >= -0.05;
    return out;
}

std::vector<double> growth_default_centers(const RadialMeasure& sigma)
{
    const double sup = sigma.support_sup();
    const double scale = (std::isfinite(sup) && sup > 0.0) ? sup : 1.0;
    std::vector<double> centers = {0.0};
    for (int k = -6; k <= 2; ++k) centers.push_back(scale * std::pow(10.0, 0.5 * k));
    return centers;
}

std::vector<double> growth_default_radii(const RadialMeasure& sigma)
{
    const double sup = sigma.support_sup();
    const double scale = (std::isfinite(sup) && sup > 0.0) ? sup : 1.0;
    std::vector<double> radii;
    for (int k = 0; k < 40; ++k)
        radii.push_back(scale * 1e-6 * std::pow(10.0, 8.0 * k / 39.0));
    return radii;
}

GrowthResult growth_test(const RadialMeasure& sigma, const ExponentSet& exps,
                         const std::vector<double>& centers, const std::vector<double>& radii)
{
    GrowthResult out;
    const auto breaks = sigma.breakpoints();
    auto sup_over = [&](const std::vector<double>& cs, const std::vector<double>& ts,
                        double* wc, double* wt) {
        double sup = 0.0;
        for (double c : cs) {
            // tangency radii: the ratio jumps where B(x,t) first swallows a
            // structural sphere, so sample just past each such t
            std::vector<double> adapted = ts;
            for (double b : breaks) {
                adapted.push_back(std::abs(c - b) * (1.0 + 1e-9) + 1e-300);
                adapted.push_back((c + b) * (1.0 + 1e-9));
            }
            for (double t : adapted) {
                if (!(t > 0.0)) continue;
                const double ratio =
                    ball_mass_offcenter(sigma, c, t, exps.n) / std::pow(t, exps.d);
                if (ratio > sup) {
                    sup = ratio;
                    if (wc) *wc = c;
                    if (wt) *wt = t;
                }
            }
        }
        return sup;
    };
    out.sup = sup_over(centers, radii, &out.witness_center, &out.witness_radius);

    // refinement: double the sample density and push t downward
    std::vector<double> cs2 = centers, ts2 = radii;
    for (std::size_t i = 0; i + 1 < centers.size(); ++i)
        cs2.push_back(0.5 * (centers[i] + centers[i + 1]));
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        ts2.push_back(std::sqrt(radii[i] * radii[i + 1]));
    double t_min = *std::min_element(radii.begin(), radii.end());
    for (int k = 1; k <= 4; ++k) ts2.push_back(t_min / std::pow(2.0, k));
    const double fine = sup_over(cs2, ts2, nullptr, nullptr);
    out.bounded = std::isfinite(fine) && fine <= out.sup * (1.0 + kStability);
    if (fine > out.sup) out.sup = fine;
    return out;
}

DominationResult domination_check(const RadialMeasure& mu, const RadialMeasure& sigma,
                                  const ExponentSet& exps, const RadialGrid& grid)
{
    if (mu.is_zero()) return {true, 0.0};
    std::vector<double> radii = grid.radii();
    std::vector<double> outer, inner;
    for (int k = 1; k <= 6; ++k) outer.push_back(grid.back() * std::pow(4.0, k));
    for (int k = 1; k <= 4; ++k) inner.push_back(grid.front() / std::pow(4.0, k));

    auto ratio_at = [&](double x) {
        const double am = riesz_comparable(mu, exps, x);
        const double as = riesz_comparable(sigma, exps, x);
        if (am == 0.0) return 0.0;
        if (as == 0.0 || !std::isfinite(am)) return kInf;
        return am / as;
    };

    double sup = 0.0;
    for (double x : radii) sup = std::max(sup, ratio_at(x));
    std::vector<double> outer_r, inner_r;
    for (double x : outer) outer_r.push_back(ratio_at(x));
    for (double x : inner) inner_r.push_back(ratio_at(x));
    for (double v : outer_r) sup = std::max(sup, v);
    for (double v : inner_r) sup = std::max(sup, v);

    bool rising = false;
    // a ratio still climbing at the sampling margin means C = +inf
    if (outer_r.size() >= 3) {
        const std::size_t m = outer_r.size();
        rising = rising || (outer_r[m - 1] > outer_r[m - 2] * 1.02 &&
                            outer_r[m - 2] > outer_r[m - 3] * 1.02);
    }
    if (inner_r.size() >= 3) {
        const std::size_t m = inner_r.size();
        rising = rising || (inner_r[m - 1] > inner_r[m - 2] * 1.02 &&
                            inner_r[m - 2] > inner_r[m - 3] * 1.02);
    }
    const bool finite = std::isfinite(sup) && !rising;
    return {finite, finite ? sup : kInf};
}

} // namespace radpot
