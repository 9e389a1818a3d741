#include "radpot/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "radpot/potentials.hpp"

namespace radpot {

namespace {

double least_squares_slope(const std::vector<std::pair<double, double>>& pts)
{
    // pts: (log x, log y)
    if (pts.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (n * sxy - sx * sy) / denom;
}

} // namespace

const char* to_string(LimcClass c)
{
    switch (c) {
        case LimcClass::Bounded: return "BOUNDED";
        case LimcClass::Divergent: return "DIVERGENT";
        default: return "INCONCLUSIVE";
    }
}

FlagValue check_finpot(const RadialMeasure& sigma, const ExponentSet& exps)
{
    const double tail = moment(sigma, exps.d, 1.0, kInf, exps.n);
    const double near = ball_mass(sigma, 1.0, exps.n);
    return {std::isfinite(tail) && std::isfinite(near), tail};
}

RadialCondResult check_radialcond(const RadialMeasure& sigma, const ExponentSet& exps)
{
    RadialCondResult res;
    const double m1 = moment(sigma, exps.d * exps.r1, 0.0, 1.0, exps.n);
    const double m2 = moment(sigma, exps.d * exps.r2, 0.0, 1.0, exps.n);
    const double mt = moment(sigma, exps.d, 1.0, kInf, exps.n);
    res.local1 = {std::isfinite(m1), m1};
    res.local2 = {std::isfinite(m2), m2};
    res.tail = {std::isfinite(mt), mt};
    res.holds = res.local1.flag && res.local2.flag && res.tail.flag;
    return res;
}

std::vector<double> limc_sample_radii(const RadialMeasure& sigma)
{
    const double sup = sigma.support_sup();
    if (sup <= 0.0) return {1.0};
    const double hi = std::min(1.0, sup);

    double min_pos = sigma.min_positive_support();
    double lo;
    if (min_pos == kInf)
        lo = hi; // only an origin atom: a single sample suffices
    else if (min_pos <= 0.0)
        lo = hi * std::pow(2.0, -40);
    else
        lo = std::min(hi, min_pos * (1.0 + 1e-9));

    std::vector<double> radii;
    for (int k = 0; k <= 40; ++k) {
        const double x = hi * std::pow(2.0, -k);
        if (x < lo) break;
        radii.push_back(x);
    }
    radii.push_back(lo);
    radii.push_back(hi);

    // bracket each atom just above its open-ball step and ladder the gaps
    std::vector<double> marks;
    for (double b : sigma.breakpoints())
        if (b >= lo && b <= hi) marks.push_back(b);
    marks.push_back(lo);
    marks.push_back(hi);
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    for (const auto& a : sigma.atoms)
        if (a.mass > 0.0 && a.radius >= lo && a.radius * (1.0 + 1e-9) <= hi)
            radii.push_back(a.radius * (1.0 + 1e-9));
    for (std::size_t j = 0; j + 1 < marks.size(); ++j) {
        const double g0 = marks[j], g1 = marks[j + 1];
        if (!(g1 > g0 * 1.01)) continue;
        for (int t = 1; t < 8; ++t)
            radii.push_back(g0 * std::pow(g1 / g0, t / 8.0));
    }

    std::sort(radii.begin(), radii.end(), std::greater<double>());
    radii.erase(std::unique(radii.begin(), radii.end(),
                            [](double a, double b) { return a <= b * (1.0 + 1e-12); }),
                radii.end());
    return radii;
}

std::array<LimcResult, 2> check_limc(const RadialMeasure& sigma, const ExponentSet& exps,
                                     const std::vector<double>& radii)
{
    std::array<LimcResult, 2> out;
    for (int i = 1; i <= 2; ++i) {
        LimcResult& res = out[i - 1];
        res.i = i;
        if (sigma.is_zero()) {
            res.classification = LimcClass::Bounded;
            res.note = "zero measure";
            continue;
        }
        bool any_infinite = false;
        bool any_positive_num = false;
        bool tail_divergent = false;
        for (double x : radii) {
            const double num = moment(sigma, exps.d * exps.r(i), 0.0, x, exps.n);
            const double den = moment(sigma, exps.d, x, kInf, exps.n);
            double ratio;
            if (num == kInf && den == kInf) {
                tail_divergent = true;
                continue; // undefined sample; the tail flag already fails
            }
            if (num == kInf) {
                any_infinite = true;
                ratio = kInf;
            } else if (den == kInf) {
                tail_divergent = true;
                ratio = 0.0;
            } else if (den == 0.0) {
                ratio = (num == 0.0) ? 0.0 : kInf;
                if (num > 0.0) any_infinite = true;
            } else {
                ratio = std::pow(x, -exps.d / exps.gamma(i)) * num / den;
            }
            if (num > 0.0) any_positive_num = true;
            res.samples.emplace_back(x, ratio);
        }
        if (tail_divergent) res.note = "tail moment divergent";

        if (any_infinite) {
            res.classification = LimcClass::Divergent;
            res.estimated_limsup = kInf;
            if (res.note.empty()) res.note = "divergent ratio sample";
            continue;
        }
        if (!any_positive_num) {
            res.classification = LimcClass::Bounded;
            res.note = "numerator vanishes near the origin";
            continue;
        }
        if (res.samples.empty()) {
            res.classification = LimcClass::Inconclusive;
            continue;
        }

        // slope over the smallest sampled radii with positive ratio
        std::vector<std::pair<double, double>> fit_pts;
        for (auto it = res.samples.rbegin(); it != res.samples.rend() && fit_pts.size() < 8; ++it)
            if (it->second > 0.0) fit_pts.emplace_back(std::log(it->first), std::log(it->second));
        res.slope = least_squares_slope(fit_pts);

        double max_ratio = 0.0;
        for (const auto& [x, rto] : res.samples) max_ratio = std::max(max_ratio, rto);
        const std::size_t m = res.samples.size();
        const std::size_t quarter = std::max<std::size_t>(1, m / 4);
        double est = 0.0;
        for (std::size_t k = m - quarter; k < m; ++k)
            est = std::max(est, res.samples[k].second);
        res.estimated_limsup = est;

        bool smallest_exceed = m >= 3;
        for (std::size_t k = m - std::min<std::size_t>(3, m); k < m; ++k)
            smallest_exceed = smallest_exceed && res.samples[k].second > kDivergenceThreshold;
        bool monotone_growth = m >= 2;
        for (std::size_t k = m - std::min<std::size_t>(5, m); k + 1 < m; ++k)
            monotone_growth = monotone_growth && res.samples[k + 1].second > res.samples[k].second;

        if (smallest_exceed && monotone_growth && res.slope < kSlopeDivergent)
            res.classification = LimcClass::Divergent;
        else if (res.slope >= kSlopeBounded && max_ratio < kDivergenceThreshold)
            res.classification = LimcClass::Bounded;
        else
            res.classification = LimcClass::Inconclusive;
    }
    return out;
}

namespace {

/// Shared sup-with-refinement logic for con2 / c114.
FlagValue sup_with_stability(const std::function<double(const RadialGrid&)>& sup_on,
                             const RadialGrid& grid)
{
    const double coarse = sup_on(grid);
    if (!std::isfinite(coarse)) return {false, coarse};
    const double fine = sup_on(grid.refined());
    if (!std::isfinite(fine)) return {false, fine};
    const bool stable = std::abs(fine - coarse) <= 0.10 * std::max(fine, 1e-300);
    return {stable && fine < kDivergenceThreshold, fine};
}

} // namespace

std::array<FlagValue, 2> check_con2(const RadialMeasure& sigma, const ExponentSet& exps,
                                    const RadialGrid& grid)
{
    std::array<FlagValue, 2> out;
    if (sigma.is_zero()) {
        out[0] = out[1] = {true, 0.0};
        return out;
    }
    for (int i = 1; i <= 2; ++i) {
        auto sup_on = [&](const RadialGrid& g) {
            double sup = 0.0;
            for (double x : g.radii()) {
                const double a = riesz_comparable(sigma, exps, x);
                if (!std::isfinite(a)) return kInf; // (1.2) precondition fails
                const double k = k_potential(sigma, exps, i, x);
                const double denom = a + std::pow(a, exps.gamma(i));
                if (denom > 0.0) sup = std::max(sup, k / denom);
            }
            return sup;
        };
        out[i - 1] = sup_with_stability(sup_on, grid);
    }
    return out;
}

std::array<FlagValue, 2> check_c114(const RadialMeasure& sigma, const ExponentSet& exps,
                                    const RadialGrid& grid)
{
    std::array<FlagValue, 2> out;
    if (sigma.is_zero()) {
        out[0] = out[1] = {true, 0.0};
        return out;
    }
    for (int i = 1; i <= 2; ++i) {
        const double q_exp = exps.q(i) * exps.gamma(i == 1 ? 2 : 1);
        auto sup_on = [&](const RadialGrid& g) -> double {
            std::vector<double> avals(g.size());
            for (std::size_t k = 0; k < g.size(); ++k) {
                avals[k] = riesz_comparable(sigma, exps, g[k]);
                if (!std::isfinite(avals[k])) return kInf;
            }
            GridFunction w(g, avals, -(exps.d + 1.0), 0.0);
            const auto lhs = weighted_potential_on_grid(sigma, w, q_exp, exps);
            double sup = 0.0;
            for (std::size_t k = 0; k < g.size(); ++k) {
                const double denom = avals[k] + std::pow(avals[k], exps.gamma(i));
                if (!std::isfinite(lhs[k])) return kInf;
                if (denom > 0.0) sup = std::max(sup, lhs[k] / denom);
            }
            return sup;
        };
        out[i - 1] = sup_with_stability(sup_on, grid);
    }
    return out;
}

RadialGrid make_criteria_grid(const RadialMeasure& sigma, std::size_t base_points)
{
    double lo = 1e-4, hi = 1e4;
    const double min_pos = sigma.min_positive_support();
    if (std::isfinite(min_pos) && min_pos > 0.0) lo = std::min(lo, 0.5 * min_pos);
    const double sup = sigma.support_sup();
    if (std::isfinite(sup) && sup > 0.0) hi = std::max(hi, 4.0 * sup);
    return RadialGrid::log_spaced(lo, hi, base_points).with_breakpoints(sigma);
}

CriteriaReport run_criteria(const RadialMeasure& sigma, const ExponentSet& exps,
                            const RadialGrid& grid)
{
    CriteriaReport rep;
    rep.finpot = check_finpot(sigma, exps);
    rep.radialcond = check_radialcond(sigma, exps);
    rep.limc = check_limc(sigma, exps, limc_sample_radii(sigma));
    rep.limc_tail_finite = rep.radialcond.tail.flag;
    rep.con2 = check_con2(sigma, exps, grid);
    rep.c114 = check_c114(sigma, exps, grid);
    return rep;
}

} // namespace radpot
