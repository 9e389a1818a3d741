#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "radpot/exponents.hpp"
#include "radpot/grid.hpp"
#include "radpot/measure.hpp"
#include "radpot/solver.hpp"

namespace radpot {

/// Measured constants of the two-sided pointwise bounds. c_* are the
/// Brezis-Kamin sandwich constants, profile_* the constants of the
/// two-term radial profile; component 0 is u, component 1 is v.
struct BoundReport {
    std::array<double, 2> c_low{};
    std::array<double, 2> c_up{};
    std::array<double, 2> profile_low{};
    std::array<double, 2> profile_up{};
    bool stable = false;
    bool trivial = false;
    std::string violation; // empty when the bounds hold as inequalities
};

/// c_low = sup (A sigma)^gamma_i / comp_i, c_up = sup comp_i / (A sigma +
/// (A sigma)^gamma_i) over the solve grid; stability = all constants move
/// < 10% when the solve is repeated on the log-refined grid. Pass mu1/mu2
/// when `result` came from the inhomogeneous solver.
BoundReport verify_sandwich(const SolveResult& result, const RadialMeasure& sigma,
                            const ExponentSet& exps, const SolveConfig& cfg,
                            const RadialMeasure* mu1 = nullptr,
                            const RadialMeasure* mu2 = nullptr);

/// Sup and inf of comp_i / (K_i sigma + tail_moment^gamma_i), the profile
/// of Theorem 2.1; same stability protocol.
BoundReport verify_profile(const SolveResult& result, const RadialMeasure& sigma,
                           const ExponentSet& exps, const SolveConfig& cfg,
                           const RadialMeasure* mu1 = nullptr,
                           const RadialMeasure* mu2 = nullptr);

struct KappaResult {
    double kappa = 0.0;
    bool skipped = false; // r below 1e-3: the inequality degenerates
};

/// Largest kappa with I((A sigma)^r d sigma) >= kappa^r (A sigma)^{r+1}
/// at every grid point.
KappaResult kappa_lowerbound_test(const RadialMeasure& sigma, const ExponentSet& exps,
                                  double r, const RadialGrid& grid);

struct EnergyResult {
    std::vector<std::pair<double, double>> ratios; // (R, ratio); divergent ratios are +inf
    double sup = 0.0;
    bool bounded = false;
};

/// int_{B(0,R)} (A(sigma|_{B(0,R)}))^s d sigma / sigma(B(0,R)) for each R;
/// bounded iff no ratio is infinite and the small-R slope is flat.
EnergyResult energy_test(const RadialMeasure& sigma, const ExponentSet& exps, double s,
                         const std::vector<double>& R_list);

struct GrowthResult {
    double sup = 0.0;
    double witness_center = 0.0;
    double witness_radius = 0.0;
    bool bounded = false;
};

/// sup of sigma(B(x,t)) / t^d over sampled centers and radii — the ball
/// growth surrogate for the capacity condition. bounded requires the sup
/// to be stable (< 10% growth) under sample refinement.
GrowthResult growth_test(const RadialMeasure& sigma, const ExponentSet& exps,
                         const std::vector<double>& centers, const std::vector<double>& radii);

/// Default sample sets for growth_test.
std::vector<double> growth_default_centers(const RadialMeasure& sigma);
std::vector<double> growth_default_radii(const RadialMeasure& sigma);

struct DominationResult {
    bool finite = false;
    double constant = 0.0;
};

/// sup over the grid (plus margin radii beyond both ends) of
/// A mu / A sigma, with 0/0 -> 0 and positive/0 -> +inf.
DominationResult domination_check(const RadialMeasure& mu, const RadialMeasure& sigma,
                                  const ExponentSet& exps, const RadialGrid& grid);

} // namespace radpot
