#include "radpot/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace radpot {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Newton iteration on Legendre polynomials; standard construction.
GaussLegendreTable build_gauss_legendre(int order)
{
    GaussLegendreTable t;
    t.nodes.resize(order);
    t.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        t.nodes[i] = -x;
        t.nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        t.weights[i] = w;
        t.weights[order - 1 - i] = w;
    }
    return t;
}

} // namespace

const GaussLegendreTable& gauss_legendre(int order)
{
    static std::map<int, GaussLegendreTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, build_gauss_legendre(order)).first;
    return it->second;
}

double unit_sphere_area(int n)
{
    return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

double sin_power_total(int k)
{
    return std::sqrt(kPi) * std::exp(std::lgamma(0.5 * (k + 1)) - std::lgamma(0.5 * k + 1.0));
}

namespace {

/// Two-sided series for theta -> 0: the reduction formula cancels its
/// leading terms there and loses all relative accuracy.
double sin_power_integral_series(int k, double theta)
{
    const double t2 = theta * theta;
    const double lead = std::pow(theta, k + 1);
    return lead * (1.0 / (k + 1) - k * t2 / (6.0 * (k + 3)) +
                   k * (5.0 * k - 2.0) * t2 * t2 / (360.0 * (k + 5)));
}

} // namespace

double sin_power_integral(int k, double theta)
{
    if (theta <= 0.0) return 0.0;
    if (theta >= kPi) return sin_power_total(k);
    if (theta < 0.01) return sin_power_integral_series(k, theta);
    if (theta > kPi - 0.01)
        return sin_power_total(k) - sin_power_integral_series(k, kPi - theta);
    // S_k = (-cos t sin^{k-1} t + (k-1) S_{k-2}) / k,  S_0 = t,  S_1 = 1 - cos t
    double s_prev = theta;                 // S_0
    if (k == 0) return s_prev;
    double c = std::cos(theta), s = std::sin(theta);
    double s_cur = 1.0 - c;               // S_1
    for (int j = 2; j <= k; ++j) {
        double next = (-c * std::pow(s, j - 1) + (j - 1) * s_prev) / j;
        s_prev = s_cur;
        s_cur = next;
    }
    return s_cur;
}

double integrate_power(double e, double x0, double x1)
{
    if (x0 < 0.0 || x1 <= x0) return 0.0;
    const double ep1 = e + 1.0;
    if (x1 == kInf) {
        if (ep1 >= 0.0) return kInf;
        // -x0^{e+1}/(e+1); x0 = 0 with e < -1 also diverges at the origin
        if (x0 == 0.0) return kInf;
        return -std::pow(x0, ep1) / ep1;
    }
    if (x0 == 0.0) {
        if (ep1 <= 0.0) return kInf;
        return std::pow(x1, ep1) / ep1;
    }
    if (ep1 == 0.0) return std::log(x1 / x0);
    // x0^{e+1} * expm1((e+1) ln(x1/x0)) / (e+1): stable as e -> -1
    return std::pow(x0, ep1) * std::expm1(ep1 * std::log(x1 / x0)) / ep1;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int order)
{
    const auto& t = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i)
        sum += t.weights[i] * f(mid + half * t.nodes[i]);
    return sum * half;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int initial_order)
{
    if (!(b > a)) return 0.0;
    double prev = gl_integrate(f, a, b, initial_order);
    for (int order = 2 * initial_order; order <= 8192; order *= 2) {
        double cur = gl_integrate(f, a, b, order);
        if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300))
            return cur;
        prev = cur;
    }
    return prev;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b, double rel_tol)
{
    if (!(b > a)) return 0.0;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    // trapezoid in t over nodes x = mid + half*tanh(pi/2 sinh t)
    auto eval = [&](double t) -> double {
        const double u = 0.5 * kPi * std::sinh(t);
        const double x = mid + half * std::tanh(u);
        if (x <= a || x >= b) return 0.0;
        const double ch = std::cosh(u);
        const double w = half * 0.5 * kPi * std::cosh(t) / (ch * ch);
        const double v = f(x);
        if (!std::isfinite(v)) return 0.0; // integrable endpoint spike sampled exactly on it
        return v * w;
    };
    const double t_max = 6.5; // tanh(pi/2 sinh 6.5) is 1 to machine precision
    double h = 1.0;
    double sum = eval(0.0);
    for (double t = h; t <= t_max; t += h)
        sum += eval(t) + eval(-t);
    double prev = sum * h;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= t_max; t += 2.0 * h)
            add += eval(t) + eval(-t);
        sum += add;
        double cur = sum * h;
        if (level >= 3 && std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1e-300))
            return cur;
        prev = cur;
    }
    return prev;
}

double integrate_log_segmented(const std::function<double(double)>& f, double a, double b,
                               double rel_tol)
{
    if (!(b > a)) return 0.0;
    if (a <= 0.0)
        throw std::invalid_argument("integrate_log_segmented requires a > 0");
    const double decades = std::log10(b / a);
    const int nseg = std::max(1, std::min(64, static_cast<int>(std::ceil(decades))));
    double sum = 0.0;
    for (int k = 0; k < nseg; ++k) {
        const double lo = a * std::pow(b / a, static_cast<double>(k) / nseg);
        const double hi = a * std::pow(b / a, static_cast<double>(k + 1) / nseg);
        sum += tanh_sinh(f, lo, hi, rel_tol);
    }
    return sum;
}

} // namespace radpot
