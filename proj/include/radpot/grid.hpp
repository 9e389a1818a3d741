#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "radpot/measure.hpp"

namespace radpot {

/// Strictly increasing positive radii, at least 8 points, adjacent ratio
/// bounded. Default construction is log-spaced.
class RadialGrid {
public:
    explicit RadialGrid(std::vector<double> radii);

    static RadialGrid log_spaced(double r_min, double r_max, std::size_t points);

    /// Log-midpoints inserted between every adjacent pair (2N-1 points).
    RadialGrid refined() const;

    /// Insert the measure's breakpoints (atom radii, finite piece bounds)
    /// that fall inside [front, back], a just-above bracket at each atom,
    /// and enough log-fill to keep adjacent ratios <= 10.
    RadialGrid with_breakpoints(const RadialMeasure& sigma) const;

    const std::vector<double>& radii() const { return r_; }
    std::size_t size() const { return r_.size(); }
    double operator[](std::size_t i) const { return r_[i]; }
    double front() const { return r_.front(); }
    double back() const { return r_.back(); }

private:
    std::vector<double> r_;
};

/// Nonnegative function sampled on a radial grid. Within a cell the value
/// is interpolated linearly in (log r, log v); below the first radius and
/// above the last it continues as a power law whose exponents are fitted
/// from the outermost cells. Tail exponents may be clamped at construction
/// to keep tail integrals finite (potential-type functions decay no slower
/// than r^-d and no faster than r^-(d+1) matters for the integrals used
/// here).
class GridFunction {
public:
    GridFunction() = default;

    /// tail_clamp = {lo, hi}: the fitted tail exponent is clamped into
    /// [lo, hi]. Pass {-inf, inf} (the default) to keep the raw fit.
    GridFunction(RadialGrid grid, std::vector<double> values,
                 double tail_clamp_lo = -kInf, double tail_clamp_hi = kInf);

    static GridFunction sample(const RadialGrid& grid, const std::function<double(double)>& f,
                               double tail_clamp_lo = -kInf, double tail_clamp_hi = kInf);

    double operator()(double r) const;

    const RadialGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double head_exponent() const { return head_exp_; }
    double tail_exponent() const { return tail_exp_; }

    /// Power-law parameters on cell k: v(r) = value(k) * (r / r_k)^slope.
    double cell_slope(std::size_t k) const { return slopes_[k]; }

private:
    RadialGrid grid_ = RadialGrid::log_spaced(1.0, 10.0, 8);
    std::vector<double> values_;
    std::vector<double> slopes_;
    double head_exp_ = 0.0;
    double tail_exp_ = 0.0;
};

} // namespace radpot
