#pragma once

#include <utility>
#include <vector>

#include "radpot/exponents.hpp"
#include "radpot/grid.hpp"
#include "radpot/measure.hpp"

namespace radpot {

struct LambdaSearch {
    double lo = 1e-10;
    double hi = 1e6;
    int steps = 60;
};

struct SolveConfig {
    RadialGrid grid = RadialGrid::log_spaced(1e-4, 1e4, 257);
    double tol = 1e-8;
    int max_iter = 200;
    LambdaSearch lambda_search;
    /// Iterate with the exact spherical-average kernel instead of the
    /// comparable form. Much slower; for comparison runs.
    bool exact_kernel = false;
};

struct SolveResult {
    GridFunction u, v;
    int iterations = 0;
    bool converged = false;
    bool trivial = false; // sigma = 0: the zero solution
    std::vector<std::pair<double, double>> residual_trace; // per-iteration (res_u, res_v)
    double lambda_sub = 0.0;
    double lambda_super = 0.0;
    bool supersolution_found = false;
    double monotone_violation = 0.0; // magnitude of the worst negative relative increment
    double fixed_point_residual = 0.0;
};

/// The pair (lambda (A sigma)^gamma1, lambda (A sigma)^gamma2) sampled on
/// the grid. Throws SeedError naming the radius where A sigma is infinite.
std::pair<GridFunction, GridFunction> subsolution_seed(const RadialMeasure& sigma,
                                                       const ExponentSet& exps, double lambda,
                                                       const RadialGrid& grid);

/// Largest lambda in the bisection lattice whose seed satisfies the
/// numerical subsolution inequalities at every grid point. Returns
/// search.hi (vacuous) for the zero measure; throws CalibrationError when
/// no lattice value works. The inequalities are checked against the same
/// operator the solve will iterate (comparable or exact).
double calibrate_lambda_sub(const RadialMeasure& sigma, const ExponentSet& exps,
                            const RadialGrid& grid, const LambdaSearch& search = {},
                            bool exact_kernel = false);

/// Smallest lattice lambda making
///   (lambda (A + A^gamma1), lambda (A + A^gamma2))
/// a numerical supersolution of the (possibly forced) system. found =
/// false when no lambda below the cap works.
struct SupersolutionResult {
    bool found = false;
    double lambda = 0.0;
};
SupersolutionResult supersolution_check(const RadialMeasure& sigma, const RadialMeasure& mu1,
                                        const RadialMeasure& mu2, const ExponentSet& exps,
                                        const RadialGrid& grid, const LambdaSearch& search = {});

/// Monotone sub/supersolution iteration for the homogeneous system
/// u = I(v^q1 d sigma), v = I(u^q2 d sigma), started from the calibrated
/// subsolution seed.
SolveResult monotone_solve(const RadialMeasure& sigma, const ExponentSet& exps,
                           const SolveConfig& cfg);

/// Same iteration with additive forcing A mu_i inside each half-step.
/// Requires I_{2a} mu_i <= C I_{2a} sigma (checked; DominationError
/// otherwise).
SolveResult monotone_solve_inhom(const RadialMeasure& sigma, const RadialMeasure& mu1,
                                 const RadialMeasure& mu2, const ExponentSet& exps,
                                 const SolveConfig& cfg);

} // namespace radpot
