#include "radpot/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radpot/errors.hpp"

namespace radpot {

namespace {

/// Adjacent ratios beyond this are rejected outright; with_breakpoints
/// fills gaps down to kFillRatio.
constexpr double kMaxRatio = 1e15;
constexpr double kFillRatio = 10.0;

double fit_slope(double r0, double v0, double r1, double v1)
{
    if (!(v0 > 0.0) || !(v1 > 0.0)) return 0.0;
    return std::log(v1 / v0) / std::log(r1 / r0);
}

} // namespace

RadialGrid::RadialGrid(std::vector<double> radii) : r_(std::move(radii))
{
    if (r_.size() < 8)
        throw ParameterError("radial grid needs at least 8 points, got " +
                             std::to_string(r_.size()));
    if (!(r_.front() > 0.0))
        throw ParameterError("radial grid radii must be positive");
    for (std::size_t i = 1; i < r_.size(); ++i) {
        if (!(r_[i] > r_[i - 1]))
            throw ParameterError("radial grid radii must be strictly increasing");
        if (r_[i] / r_[i - 1] > kMaxRatio)
            throw ParameterError("radial grid adjacent ratio exceeds bound");
    }
}

RadialGrid RadialGrid::log_spaced(double r_min, double r_max, std::size_t points)
{
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw ParameterError("log_spaced requires 0 < r_min < r_max");
    if (points < 8) throw ParameterError("log_spaced requires at least 8 points");
    std::vector<double> r(points);
    const double l0 = std::log(r_min), l1 = std::log(r_max);
    for (std::size_t i = 0; i < points; ++i)
        r[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / (points - 1));
    r.front() = r_min;
    r.back() = r_max;
    return RadialGrid(std::move(r));
}

RadialGrid RadialGrid::refined() const
{
    std::vector<double> r;
    r.reserve(2 * r_.size() - 1);
    for (std::size_t i = 0; i + 1 < r_.size(); ++i) {
        r.push_back(r_[i]);
        r.push_back(std::sqrt(r_[i] * r_[i + 1]));
    }
    r.push_back(r_.back());
    return RadialGrid(std::move(r));
}

RadialGrid RadialGrid::with_breakpoints(const RadialMeasure& sigma) const
{
    std::vector<double> r = r_;
    const double lo = r_.front(), hi = r_.back();
    auto add = [&](double x) {
        if (x > lo && x < hi) r.push_back(x);
    };
    for (double b : sigma.breakpoints())
        add(b);
    for (const auto& a : sigma.atoms) {
        if (a.mass <= 0.0) continue;
        add(a.radius * (1.0 + 1e-9)); // peak side of the open-ball step
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end(),
                        [](double a, double b) { return b <= a * (1.0 + 1e-13); }),
            r.end());
    // log-fill long gaps
    std::vector<double> filled;
    filled.push_back(r.front());
    for (std::size_t i = 1; i < r.size(); ++i) {
        const double ratio = r[i] / r[i - 1];
        if (ratio > kFillRatio) {
            const int k = static_cast<int>(std::ceil(std::log(ratio) / std::log(kFillRatio)));
            for (int j = 1; j < k; ++j)
                filled.push_back(r[i - 1] * std::pow(ratio, static_cast<double>(j) / k));
        }
        filled.push_back(r[i]);
    }
    return RadialGrid(std::move(filled));
}

GridFunction::GridFunction(RadialGrid grid, std::vector<double> values,
                           double tail_clamp_lo, double tail_clamp_hi)
    : grid_(std::move(grid)), values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw ParameterError("grid function needs one value per radius");
    for (double v : values_)
        if (v < 0.0 || !std::isfinite(v))
            throw ParameterError("grid function values must be finite and nonnegative");

    const std::size_t n = grid_.size();
    slopes_.resize(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k)
        slopes_[k] = fit_slope(grid_[k], values_[k], grid_[k + 1], values_[k + 1]);

    head_exp_ = fit_slope(grid_[0], values_[0], grid_[1], values_[1]);
    double te = fit_slope(grid_[n - 2], values_[n - 2], grid_[n - 1], values_[n - 1]);
    tail_exp_ = std::min(std::max(te, tail_clamp_lo), tail_clamp_hi);
}

GridFunction GridFunction::sample(const RadialGrid& grid, const std::function<double(double)>& f,
                                  double tail_clamp_lo, double tail_clamp_hi)
{
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        v[i] = f(grid[i]);
    return GridFunction(grid, std::move(v), tail_clamp_lo, tail_clamp_hi);
}

double GridFunction::operator()(double r) const
{
    const auto& rad = grid_.radii();
    if (r <= rad.front()) {
        if (values_.front() == 0.0) return 0.0;
        return values_.front() * std::pow(r / rad.front(), head_exp_);
    }
    if (r >= rad.back()) {
        if (values_.back() == 0.0) return 0.0;
        return values_.back() * std::pow(r / rad.back(), tail_exp_);
    }
    const auto it = std::upper_bound(rad.begin(), rad.end(), r);
    const std::size_t k = static_cast<std::size_t>(it - rad.begin()) - 1;
    if (values_[k] == 0.0 || values_[k + 1] == 0.0) {
        // log-log interpolation undefined; fall back to linear
        const double t = (r - rad[k]) / (rad[k + 1] - rad[k]);
        return values_[k] + t * (values_[k + 1] - values_[k]);
    }
    return values_[k] * std::pow(r / rad[k], slopes_[k]);
}

} // namespace radpot
