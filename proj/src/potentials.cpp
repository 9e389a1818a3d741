#include "radpot/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radpot/errors.hpp"

namespace radpot {

namespace {

constexpr double kRieszTol = 1e-9;
constexpr double kWolffTol = 1e-7;

/// Kernel distance squared, cancellation-free: (x-r)^2 + 4 x r sin^2(t/2).
double kernel_dist_sq(double x, double r, double theta)
{
    const double s = std::sin(0.5 * theta);
    const double diff = x - r;
    return diff * diff + 4.0 * x * r * s * s;
}

/// Piecewise-power regions of a grid function: head continuation, one per
/// cell, tail continuation. v(r) = ref_v * (r / ref_r)^slope on [lo, hi).
struct WRegion {
    double lo, hi, ref_r, ref_v, slope;
};

std::vector<WRegion> w_regions(const GridFunction& w)
{
    const auto& r = w.grid().radii();
    const auto& v = w.values();
    const std::size_t n = r.size();
    std::vector<WRegion> regions;
    regions.reserve(n + 1);
    regions.push_back({0.0, r[0], r[0], v[0], w.head_exponent()});
    for (std::size_t k = 0; k + 1 < n; ++k)
        regions.push_back({r[k], r[k + 1], r[k], v[k], w.cell_slope(k)});
    regions.push_back({r[n - 1], kInf, r[n - 1], v[n - 1], w.tail_exponent()});
    return regions;
}

/// Closed-form cell integral: coeff * omega * int_{c0}^{c1} w(r)^q r^{n-1-beta-s} dr
/// with w a pure power on the cell.
double region_piece_integral(const WRegion& reg, const PowerPiece& p, double q, double s,
                             double lo, double hi, int n)
{
    const double c0 = std::max({reg.lo, p.inner, lo});
    const double c1 = std::min({reg.hi, p.outer, hi});
    if (!(c1 > c0) || p.coeff == 0.0) return 0.0;
    if (reg.ref_v == 0.0) return 0.0;
    const double e = n - 1.0 - p.beta - s + q * reg.slope;
    const double scale = p.coeff * unit_sphere_area(n) * std::pow(reg.ref_v, q) *
                         std::pow(reg.ref_r, -q * reg.slope);
    return scale * integrate_power(e, c0, c1);
}

} // namespace

double spherical_kernel_average(int n, double d, double x, double rho)
{
    if (x < 0.0 || rho < 0.0)
        throw ParameterError("spherical_kernel_average requires nonnegative radii");
    if (x == 0.0 || rho == 0.0) {
        const double m = std::max(x, rho);
        return (m > 0.0) ? std::pow(m, -d) : kInf;
    }
    if (x == rho && d >= n - 1.0) return kInf;

    if (n == 3) {
        // int_{-1}^{1} (A - B u)^{-d/2} du / 2 in closed form
        const double diff2 = (x - rho) * (x - rho);
        const double sum2 = (x + rho) * (x + rho);
        const double B = 2.0 * x * rho;
        const double m = 0.5 * d;
        if (std::abs(d - 2.0) < 1e-13) {
            if (diff2 == 0.0) return kInf;
            return std::log(sum2 / diff2) / (2.0 * B);
        }
        const double num = std::pow(diff2, 1.0 - m) - std::pow(sum2, 1.0 - m);
        return num / (B * (m - 1.0)) / 2.0;
    }

    auto f = [&](double theta) {
        return std::pow(kernel_dist_sq(x, rho, theta), -0.5 * d) *
               std::pow(std::sin(theta), n - 2.0);
    };
    const double raw = tanh_sinh(f, 0.0, 3.14159265358979323846, 1e-10);
    return raw / sin_power_total(n - 2);
}

double riesz_comparable(const RadialMeasure& sigma, const ExponentSet& exps, double x)
{
    if (x < 0.0) throw ParameterError("riesz_comparable requires x >= 0");
    if (x == 0.0) return moment(sigma, exps.d, 0.0, kInf, exps.n);
    return ball_mass(sigma, x, exps.n) * std::pow(x, -exps.d) +
           moment(sigma, exps.d, x, kInf, exps.n);
}

namespace {

/// Optional weight w^q multiplying the measure in the exact-kernel
/// integrals; the tail continuation folds into an effective power so the
/// analytic tail treatment still applies.
struct ExactWeight {
    const GridFunction* w = nullptr;
    double q = 1.0;

    double at(double r) const { return w ? std::pow((*w)(r), q) : 1.0; }
    double limit_at_zero() const
    {
        if (!w) return 1.0;
        const double v0 = w->values().front();
        if (v0 == 0.0) return 0.0;
        const double he = w->head_exponent();
        if (he > 0.0) return 0.0;
        if (he < 0.0) return kInf;
        return std::pow(v0, q);
    }
    // w(r)^q = scale * r^exponent beyond the grid
    double tail_exponent() const { return w ? q * w->tail_exponent() : 0.0; }
    double tail_scale() const
    {
        if (!w) return 1.0;
        const double vn = w->values().back();
        if (vn == 0.0) return 0.0;
        return std::pow(vn, q) * std::pow(w->grid().back(), -q * w->tail_exponent());
    }
    double tail_start() const { return w ? w->grid().back() : 0.0; }
};

double riesz_exact_weighted(const RadialMeasure& sigma, const ExponentSet& exps, double x,
                            const ExactWeight& wt)
{
    if (x < 0.0) throw ParameterError("riesz_exact requires x >= 0");
    const int n = exps.n;
    const double d = exps.d;

    double total = 0.0;
    if (sigma.origin_mass > 0.0) {
        const double w0 = wt.limit_at_zero();
        if (w0 > 0.0) {
            if (x == 0.0 || w0 == kInf) return kInf;
            total += sigma.origin_mass * w0 * std::pow(x, -d);
        }
    }
    for (const auto& a : sigma.atoms) {
        const double g = spherical_kernel_average(n, d, x, a.radius);
        if (g == kInf) return kInf;
        total += a.mass * wt.at(a.radius) * g;
    }

    const double omega = unit_sphere_area(n);
    // |c2| of the large-distance expansion g(x,r) = r^-d (1 + c2 (x/r)^2 + ...)
    const double c2 = std::max(1.0, std::abs(0.5 * d * (d + 2.0 - n) / n));

    for (const auto& p : sigma.pieces) {
        if (p.coeff == 0.0) continue;
        double hi = p.outer;
        double tail = 0.0;
        if (p.outer == kInf) {
            // beyond R the weight is a pure power: fold it into the density
            const double ce = p.coeff * wt.tail_scale();
            const double be = p.beta - wt.tail_exponent();
            double R = std::max({4.0 * x, 2.0 * p.inner, 1.0, wt.tail_start()});
            for (int k = 0; k < 60; ++k) {
                const double tm = ce * omega * integrate_power(n - 1.0 - be - d, R, kInf);
                if (tm == kInf) return kInf;
                const double corr = 4.0 * c2 * x * x * ce * omega *
                                    integrate_power(n - 1.0 - be - d - 2.0, R, kInf);
                if (tm == 0.0 || corr <= 1e-9 * tm) {
                    tail = tm;
                    break;
                }
                R *= 2.0;
            }
            hi = R;
        }
        auto f = [&](double r) {
            return spherical_kernel_average(n, d, x, r) * wt.at(r) * p.coeff * omega *
                   std::pow(r, n - 1.0 - p.beta);
        };
        auto segment = [&](double lo, double up) -> double {
            if (!(up > lo)) return 0.0;
            if (lo == 0.0) return tanh_sinh(f, 0.0, up, kRieszTol);
            return integrate_log_segmented(f, lo, up, kRieszTol);
        };
        double part = tail;
        if (x > p.inner && x < hi) {
            part += segment(p.inner, x);
            part += segment(x, hi);
        } else {
            part += segment(p.inner, hi);
        }
        total += part;
    }
    return total;
}

} // namespace

double riesz_exact(const RadialMeasure& sigma, const ExponentSet& exps, double x)
{
    return riesz_exact_weighted(sigma, exps, x, ExactWeight{});
}

double weighted_potential_exact(const RadialMeasure& sigma, const GridFunction& w, double q,
                                const ExponentSet& exps, double x)
{
    if (!(q > 0.0)) throw ParameterError("weighted_potential_exact requires q > 0");
    ExactWeight wt;
    wt.w = &w;
    wt.q = q;
    return riesz_exact_weighted(sigma, exps, x, wt);
}

namespace {

/// Distance from a point at distance dc from the origin to the support.
double support_distance(const RadialMeasure& sigma, double dc)
{
    double dist = kInf;
    if (sigma.origin_mass > 0.0) dist = std::min(dist, dc);
    for (const auto& a : sigma.atoms)
        if (a.mass > 0.0) dist = std::min(dist, std::abs(dc - a.radius));
    for (const auto& p : sigma.pieces) {
        if (p.coeff == 0.0) continue;
        if (dc >= p.inner && dc < p.outer) return 0.0;
        if (dc < p.inner)
            dist = std::min(dist, p.inner - dc);
        else if (p.outer < kInf)
            dist = std::min(dist, dc - p.outer);
    }
    return dist;
}

} // namespace

double wolff(const RadialMeasure& sigma, double alpha, double p, double x, int n)
{
    if (!(p > 1.0)) throw ParameterError("wolff requires p > 1");
    if (!(alpha > 0.0) || !(alpha < n / p))
        throw ParameterError("wolff requires 0 < alpha < n/p");
    if (x < 0.0) throw ParameterError("wolff requires x >= 0");
    if (sigma.is_zero()) return 0.0;

    const double e_pow = n - alpha * p;
    const double inv_pm1 = 1.0 / (p - 1.0);
    auto F = [&](double t) {
        const double m = ball_mass_offcenter(sigma, x, t, n);
        if (m <= 0.0) return 0.0;
        return std::pow(m * std::pow(t, -e_pow), inv_pm1);
    };

    const double t_first = support_distance(sigma, x);

    // structural breakpoints in t
    std::vector<double> bp;
    auto add_bp = [&](double t) {
        if (t > 0.0 && std::isfinite(t)) bp.push_back(t);
    };
    if (sigma.origin_mass > 0.0) add_bp(x);
    for (const auto& a : sigma.atoms) {
        add_bp(std::abs(x - a.radius));
        add_bp(x + a.radius);
    }
    double finite_extent = 0.0;
    bool unbounded = false;
    for (const auto& pc : sigma.pieces) {
        if (pc.coeff == 0.0) continue;
        add_bp(std::abs(x - pc.inner));
        add_bp(x + pc.inner);
        if (pc.outer < kInf) {
            add_bp(std::abs(x - pc.outer));
            add_bp(x + pc.outer);
            finite_extent = std::max(finite_extent, pc.outer);
        } else {
            unbounded = true;
        }
    }
    for (const auto& a : sigma.atoms) finite_extent = std::max(finite_extent, a.radius);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    // head
    double head = 0.0;
    double T0;
    if (t_first > 0.0) {
        T0 = t_first;
    } else {
        const double scale = std::max({x, sigma.min_positive_support() == kInf
                                              ? 1.0
                                              : sigma.min_positive_support(),
                                       1e-30});
        T0 = scale * 1e-8;
        if (!bp.empty()) T0 = std::min(T0, 0.25 * bp.front());
        const double f1 = F(T0), f2 = F(2.0 * T0);
        if (f1 > 0.0) {
            if (!(f2 > f1)) return kInf; // nonincreasing head: dt/t integral diverges
            const double eta = std::log(f2 / f1) / std::log(2.0);
            if (eta <= 1e-12) return kInf;
            head = f1 / eta;
        }
    }

    // numeric range: T0 .. T1, then a power-fit tail from T1, refined until
    // the total stabilizes
    double T1 = 2.0 * std::max({x + finite_extent, 2.0 * x, 2.0 * T0, 1.0});
    auto segment_integral = [&](double lo, double hi) {
        double sum = 0.0;
        double prev = lo;
        for (double b : bp) {
            if (b <= lo || b >= hi) continue;
            sum += integrate_log_segmented([&](double t) { return F(t) / t; }, prev, b, kWolffTol);
            prev = b;
        }
        sum += integrate_log_segmented([&](double t) { return F(t) / t; }, prev, hi, kWolffTol);
        return sum;
    };
    auto tail_fit = [&](double T) -> double {
        const double f1 = F(T), f2 = F(2.0 * T);
        if (f1 <= 0.0) return 0.0;
        if (!(f2 < f1)) return kInf;
        const double eta = std::log(f2 / f1) / std::log(2.0);
        if (eta >= -1e-12) return kInf;
        return f1 / (-eta);
    };

    double body = segment_integral(T0, T1);
    double total = head + body + tail_fit(T1);
    for (int k = 0; k < 30; ++k) {
        if (!unbounded && k > 0) break; // bounded support: F is an exact power beyond T1
        body += segment_integral(T1, 2.0 * T1);
        T1 *= 2.0;
        const double next = head + body + tail_fit(T1);
        const bool settled = std::isfinite(next) && std::isfinite(total) &&
                             std::abs(next - total) <= 1e-6 * std::max(next, 1e-300);
        total = next;
        if (settled) break;
    }
    return total;
}

double weighted_moment(const RadialMeasure& sigma, const GridFunction& w, double q,
                       double s, double lo, double hi, int n)
{
    if (!(q > 0.0)) throw ParameterError("weighted_moment requires q > 0");
    if (!(lo < hi)) return 0.0;

    double total = 0.0;
    if (lo == 0.0 && sigma.origin_mass > 0.0) {
        const double w0 = w.values().front();
        if (w0 > 0.0) {
            const double ee = q * w.head_exponent() - s;
            if (ee < 0.0) return kInf;
            if (ee == 0.0)
                total += sigma.origin_mass * std::pow(w0, q) *
                         std::pow(w.grid().front(), -q * w.head_exponent());
            // ee > 0: the weight vanishes at the origin
        }
    }
    for (const auto& a : sigma.atoms)
        if (a.radius >= lo && a.radius < hi && a.mass > 0.0)
            total += a.mass * std::pow(w(a.radius), q) * std::pow(a.radius, -s);

    const auto regions = w_regions(w);
    for (const auto& p : sigma.pieces) {
        if (p.coeff == 0.0) continue;
        for (const auto& reg : regions) {
            total += region_piece_integral(reg, p, q, s, lo, hi, n);
            if (total == kInf) return kInf;
        }
    }
    return total;
}

double weighted_potential(const RadialMeasure& sigma, const GridFunction& w, double q,
                          const ExponentSet& exps, double x)
{
    if (x < 0.0) throw ParameterError("weighted_potential requires x >= 0");
    if (x == 0.0) return weighted_moment(sigma, w, q, exps.d, 0.0, kInf, exps.n);
    const double local = weighted_moment(sigma, w, q, 0.0, 0.0, x, exps.n);
    const double tail = weighted_moment(sigma, w, q, exps.d, x, kInf, exps.n);
    return local * std::pow(x, -exps.d) + tail;
}

std::vector<double> weighted_potential_on_grid(const RadialMeasure& sigma,
                                               const GridFunction& w, double q,
                                               const ExponentSet& exps)
{
    const auto& r = w.grid().radii();
    const std::size_t n = r.size();
    const int dim = exps.n;

    std::vector<double> local(n), tail(n);
    local[0] = weighted_moment(sigma, w, q, 0.0, 0.0, r[0], dim);
    for (std::size_t i = 0; i + 1 < n; ++i)
        local[i + 1] = local[i] + weighted_moment(sigma, w, q, 0.0, r[i], r[i + 1], dim);
    tail[n - 1] = weighted_moment(sigma, w, q, exps.d, r[n - 1], kInf, dim);
    for (std::size_t i = n - 1; i-- > 0;)
        tail[i] = tail[i + 1] + weighted_moment(sigma, w, q, exps.d, r[i], r[i + 1], dim);

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = local[i] * std::pow(r[i], -exps.d) + tail[i];
    return out;
}

double k_potential(const RadialMeasure& sigma, const ExponentSet& exps, int i, double x)
{
    if (i != 1 && i != 2) throw ParameterError("k_potential index must be 1 or 2");
    if (!(x > 0.0)) throw ParameterError("k_potential requires x > 0");
    const double inner = moment(sigma, exps.d * exps.r(i), 0.0, x, exps.n);
    if (inner == 0.0) return 0.0;
    return std::pow(x, -exps.d) * std::pow(inner, exps.gamma(i));
}

} // namespace radpot
