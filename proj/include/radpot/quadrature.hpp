#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace radpot {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Surface area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2).
double unit_sphere_area(int n);

/// int_0^theta sin^k(t) dt for integer k >= 0 (reduction formula, exact).
double sin_power_integral(int k, double theta);

/// int_0^pi sin^k(t) dt = sqrt(pi) Gamma((k+1)/2) / Gamma(k/2 + 1).
double sin_power_total(int k);

/// int_{x0}^{x1} r^e dr with 0 <= x0 < x1 <= +inf.
/// Divergent cases return +inf; the e = -1 log form and near-(-1) exponents
/// are evaluated with expm1 to avoid cancellation.
double integrate_power(double e, double x0, double x1);

struct GaussLegendreTable {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

/// Nodes/weights for the given order, cached per order.
const GaussLegendreTable& gauss_legendre(int order);

/// Fixed-order Gauss-Legendre on [a, b].
double gl_integrate(const std::function<double(double)>& f, double a, double b, int order);

/// Gauss-Legendre with order doubling (64, 128, ...) until two successive
/// orders agree to rel_tol. Intended for smooth integrands.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int initial_order = 64);

/// tanh-sinh (double exponential) rule on [a, b]; tolerates integrable
/// endpoint singularities. Levels are refined until successive estimates
/// agree to rel_tol.
double tanh_sinh(const std::function<double(double)>& f, double a, double b, double rel_tol);

/// Integral over [a, b] (0 < a < b < inf) split into log-scale segments of
/// at most one decade, each handled by tanh_sinh. For long smooth ranges.
double integrate_log_segmented(const std::function<double(double)>& f, double a, double b,
                               double rel_tol);

} // namespace radpot
