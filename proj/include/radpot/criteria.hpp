#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "radpot/exponents.hpp"
#include "radpot/grid.hpp"
#include "radpot/measure.hpp"

namespace radpot {

/// Ratio beyond which a finite-sample criterion is treated as divergent.
inline constexpr double kDivergenceThreshold = 1e6;
/// Log-log slopes separating the limsup classifications.
inline constexpr double kSlopeBounded = -0.05;
inline constexpr double kSlopeDivergent = -0.2;

struct FlagValue {
    bool flag = false;
    double value = 0.0;
};

enum class LimcClass { Bounded, Divergent, Inconclusive };

const char* to_string(LimcClass c);

struct LimcResult {
    int i = 1;
    std::vector<std::pair<double, double>> samples; // (radius, ratio), radius descending
    double slope = 0.0;                             // log ratio vs log radius, smallest radii
    double estimated_limsup = 0.0;
    LimcClass classification = LimcClass::Inconclusive;
    std::string note;
};

struct RadialCondResult {
    FlagValue local1, local2, tail;
    bool holds = false;
};

struct CriteriaReport {
    FlagValue finpot;
    RadialCondResult radialcond;
    std::array<LimcResult, 2> limc;
    bool limc_tail_finite = false;
    std::array<FlagValue, 2> con2;
    std::array<FlagValue, 2> c114;
};

/// True iff int_1^inf sigma(B(0,t)) t^{-d} dt/t < inf, decided through the
/// equivalent tail-moment test; value carries the tail moment.
FlagValue check_finpot(const RadialMeasure& sigma, const ExponentSet& exps);

/// The three integrals of the existence criterion: the two local moments
/// below radius 1 and the tail moment beyond 1.
RadialCondResult check_radialcond(const RadialMeasure& sigma, const ExponentSet& exps);

/// Default sample radii for check_limc: a geometric ladder from
/// min(1, sup supp) down to the support infimum, with extra points
/// bracketing atoms and filling long support gaps.
std::vector<double> limc_sample_radii(const RadialMeasure& sigma);

/// Samples the ratio of Theorem 1.1's limsup criterion at the given radii
/// and classifies it BOUNDED / DIVERGENT / INCONCLUSIVE by the documented
/// slope and threshold heuristics.
std::array<LimcResult, 2> check_limc(const RadialMeasure& sigma, const ExponentSet& exps,
                                     const std::vector<double>& radii);

/// c_i = sup over the grid of K_i sigma / (A sigma + (A sigma)^{gamma_i});
/// flag requires finiteness, refinement stability (10% under doubling) and
/// a value below the divergence threshold.
std::array<FlagValue, 2> check_con2(const RadialMeasure& sigma, const ExponentSet& exps,
                                    const RadialGrid& grid);

/// Same for the composed condition: sup of
/// I_{2a}((A sigma)^{q_i gamma_j} d sigma) / (A sigma + (A sigma)^{gamma_i}).
std::array<FlagValue, 2> check_c114(const RadialMeasure& sigma, const ExponentSet& exps,
                                    const RadialGrid& grid);

/// A grid adapted to the measure for criteria sups: spans the support with
/// margin and includes the structural breakpoints.
RadialGrid make_criteria_grid(const RadialMeasure& sigma, std::size_t base_points = 193);

/// Runs every criterion.
CriteriaReport run_criteria(const RadialMeasure& sigma, const ExponentSet& exps,
                            const RadialGrid& grid);

} // namespace radpot
