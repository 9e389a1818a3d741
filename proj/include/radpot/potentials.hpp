#pragma once

#include <vector>

#include "radpot/exponents.hpp"
#include "radpot/grid.hpp"
#include "radpot/measure.hpp"

namespace radpot {

/// Spherical average of |x - y|^(-d) over the sphere |y| = rho, as a
/// function of |x|. Closed form for n = 3, quadrature otherwise. Infinite
/// when x = rho and d >= n - 1 (kernel not integrable on the sphere).
double spherical_kernel_average(int n, double d, double x, double rho);

/// I_{2 alpha} sigma(|x|) with the exact kernel: the spherical-average
/// kernel integrated in the source radius against sigma. Validation-grade:
/// criteria and the solver use riesz_comparable instead.
double riesz_exact(const RadialMeasure& sigma, const ExponentSet& exps, double x);

/// The comparable radial form
///   A sigma(x) = sigma(B(0,x)) / x^d + int_{|y| >= x} |y|^(-d) d sigma,
/// the canonical operator for criteria and the solver. At x = 0 the ball
/// term is omitted.
double riesz_comparable(const RadialMeasure& sigma, const ExponentSet& exps, double x);

/// Wolff potential W_{alpha,p} sigma(|x|) =
///   int_0^inf (sigma(B(x,t)) / t^{n - alpha p})^{1/(p-1)} dt/t,
/// with off-center ball masses, numeric quadrature between structural
/// breakpoints and power-fit head/tail closed forms.
double wolff(const RadialMeasure& sigma, double alpha, double p, double x, int n);

/// int_{lo <= |y| < hi} w(|y|)^q |y|^(-s) d sigma(y), with w a grid
/// function (piecewise power in log-log, power-law continuation). Each
/// cell integrates in closed form; divergent parts return +inf.
double weighted_moment(const RadialMeasure& sigma, const GridFunction& w, double q,
                       double s, double lo, double hi, int n);

/// I_{2 alpha}(w^q d sigma)(x) in the comparable radial form:
///   x^(-d) int_{|y|<x} w^q d sigma + int_{|y|>=x} w^q |y|^(-d) d sigma.
double weighted_potential(const RadialMeasure& sigma, const GridFunction& w, double q,
                          const ExponentSet& exps, double x);

/// Same integral with the exact spherical-average kernel instead of the
/// comparable form. Quadrature-based; for comparison runs.
double weighted_potential_exact(const RadialMeasure& sigma, const GridFunction& w, double q,
                                const ExponentSet& exps, double x);

/// weighted_potential evaluated at every radius of w's own grid, using
/// prefix sums over cells (identical values, one pass).
std::vector<double> weighted_potential_on_grid(const RadialMeasure& sigma,
                                               const GridFunction& w, double q,
                                               const ExponentSet& exps);

/// K_i sigma(x) = x^(-d) (int_{|y|<x} |y|^{-d r_i} d sigma)^{gamma_i}, x > 0.
double k_potential(const RadialMeasure& sigma, const ExponentSet& exps, int i, double x);

} // namespace radpot
