#include "radpot/measure.hpp"

#include <algorithm>
#include <cmath>

#include "radpot/errors.hpp"

namespace radpot {

namespace {

/// Mass of a piece over the radial range [lo, hi), weighted by r^(-s):
/// coeff * omega_{n-1} * int r^{n-1-beta-s} dr over the overlap.
double piece_moment(const PowerPiece& p, double s, double lo, double hi, int n)
{
    const double a = std::max(p.inner, lo);
    const double b = std::min(p.outer, hi);
    if (!(b > a) || p.coeff == 0.0) return 0.0;
    const double e = n - 1.0 - p.beta - s;
    return p.coeff * unit_sphere_area(n) * integrate_power(e, a, b);
}

} // namespace

bool RadialMeasure::is_zero() const
{
    if (origin_mass > 0.0) return false;
    for (const auto& a : atoms)
        if (a.mass > 0.0) return false;
    for (const auto& p : pieces)
        if (p.coeff > 0.0) return false;
    return true;
}

double RadialMeasure::min_positive_support() const
{
    double m = kInf;
    for (const auto& a : atoms)
        if (a.mass > 0.0) m = std::min(m, a.radius);
    for (const auto& p : pieces)
        if (p.coeff > 0.0) m = std::min(m, std::max(p.inner, 0.0));
    return m;
}

double RadialMeasure::support_sup() const
{
    double m = 0.0;
    for (const auto& a : atoms)
        if (a.mass > 0.0) m = std::max(m, a.radius);
    for (const auto& p : pieces)
        if (p.coeff > 0.0) m = std::max(m, p.outer);
    return m;
}

std::vector<double> RadialMeasure::breakpoints() const
{
    std::vector<double> b;
    for (const auto& a : atoms)
        if (a.mass > 0.0) b.push_back(a.radius);
    for (const auto& p : pieces) {
        if (p.coeff == 0.0) continue;
        if (p.inner > 0.0) b.push_back(p.inner);
        if (p.outer < kInf) b.push_back(p.outer);
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

void validate_measure(const RadialMeasure& sigma, int n)
{
    if (sigma.origin_mass < 0.0)
        throw ParameterError("origin mass must be nonnegative");
    for (const auto& a : sigma.atoms) {
        if (!(a.radius > 0.0)) throw ParameterError("shell radius must be positive");
        if (!(a.mass > 0.0)) throw ParameterError("shell mass must be positive");
    }
    for (const auto& p : sigma.pieces) {
        if (p.coeff < 0.0) throw ParameterError("piece coefficient must be nonnegative");
        if (p.inner < 0.0) throw ParameterError("piece inner radius must be nonnegative");
        if (!(p.inner < p.outer)) throw ParameterError("piece requires inner < outer");
        if (p.inner == 0.0 && p.beta >= n)
            throw ParameterError("piece touching the origin requires beta < n");
    }
}

RadialMeasure scale_measure(const RadialMeasure& sigma, double t)
{
    if (!(t > 0.0)) throw ParameterError("scale factor must be positive");
    RadialMeasure out = sigma;
    for (auto& p : out.pieces) p.coeff *= t;
    for (auto& a : out.atoms) a.mass *= t;
    out.origin_mass *= t;
    return out;
}

RadialMeasure add_measures(const RadialMeasure& a, const RadialMeasure& b)
{
    RadialMeasure out = a;
    out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
    out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
    out.origin_mass += b.origin_mass;
    return out;
}

RadialMeasure restrict_to_ball(const RadialMeasure& sigma, double R)
{
    RadialMeasure out;
    out.origin_mass = (R > 0.0) ? sigma.origin_mass : 0.0;
    for (const auto& a : sigma.atoms)
        if (a.radius < R) out.atoms.push_back(a);
    for (const auto& p : sigma.pieces) {
        if (p.inner >= R) continue;
        PowerPiece q = p;
        q.outer = std::min(p.outer, R);
        out.pieces.push_back(q);
    }
    return out;
}

double ball_mass(const RadialMeasure& sigma, double t, int n)
{
    if (!(t > 0.0)) return 0.0;
    double total = sigma.origin_mass;
    for (const auto& a : sigma.atoms)
        if (a.radius < t) total += a.mass;
    for (const auto& p : sigma.pieces)
        total += piece_moment(p, 0.0, 0.0, t, n);
    return total;
}

double moment(const RadialMeasure& sigma, double s, double a, double b, int n)
{
    if (!(a < b)) throw ParameterError("moment requires a < b");
    double total = 0.0;
    if (a == 0.0 && sigma.origin_mass > 0.0) {
        // |y|^(-s) against the point mass at 0
        if (s > 0.0) return kInf;
        if (s == 0.0) total += sigma.origin_mass;
        // s < 0: the weight vanishes at the origin
    }
    for (const auto& at : sigma.atoms)
        if (at.radius >= a && at.radius < b)
            total += at.mass * std::pow(at.radius, -s);
    for (const auto& p : sigma.pieces)
        total += piece_moment(p, s, a, b, n);
    return total;
}

namespace {

/// Cap fraction from the half-angle products 1 -+ cos(theta*), which the
/// caller can form without cancellation. theta = 2 atan2(sqrt(1-c), sqrt(1+c))
/// is uniformly accurate over [0, pi].
double cap_fraction_halves(int n, double one_minus_cos, double one_plus_cos)
{
    if (one_minus_cos <= 0.0) return 0.0;
    if (one_plus_cos <= 0.0) return 1.0;
    const double theta = 2.0 * std::atan2(std::sqrt(one_minus_cos), std::sqrt(one_plus_cos));
    return sin_power_integral(n - 2, theta) / sin_power_total(n - 2);
}

} // namespace

double cap_fraction(int n, double cos_lim)
{
    if (cos_lim <= -1.0) return 1.0;
    if (cos_lim >= 1.0) return 0.0;
    return cap_fraction_halves(n, 1.0 - cos_lim, 1.0 + cos_lim);
}

double ball_mass_offcenter(const RadialMeasure& sigma, double center_dist, double t, int n)
{
    if (!(t > 0.0)) throw ParameterError("ball_mass_offcenter requires t > 0");
    if (center_dist < 0.0) throw ParameterError("center distance must be nonnegative");
    if (center_dist == 0.0) return ball_mass(sigma, t, n);

    const double dc = center_dist;
    // Cap fraction of the sphere at radius r = dc + u, with 1 -+ cos(theta*)
    // as exact products: (t^2 - u^2) / (2 dc r) and ((r+dc)^2 - t^2) / (2 dc r).
    // Working in the offset u keeps the geometry accurate when t << dc.
    auto shell_fraction_u = [&](double u) {
        const double r = dc + u;
        const double om = (t - u) * (t + u) / (2.0 * dc * r);
        const double op = (r + dc - t) * (r + dc + t) / (2.0 * dc * r);
        return cap_fraction_halves(n, om, op);
    };

    double total = (dc < t) ? sigma.origin_mass : 0.0;
    for (const auto& a : sigma.atoms)
        total += a.mass * shell_fraction_u(a.radius - dc);

    // A source sphere of radius r is entirely inside B(x,t) for r < t - dc,
    // partially inside for |t - dc| < r < t + dc, outside beyond. In the
    // offset variable the partial band is (max(-t, t - 2 dc), t).
    const double full_hi = t - dc; // may be <= 0
    const double band_lo_u = std::max(-t, t - 2.0 * dc);
    for (const auto& p : sigma.pieces) {
        if (p.coeff == 0.0) continue;
        if (full_hi > 0.0)
            total += piece_moment(p, 0.0, 0.0, full_hi, n);
        const double u0 = std::max(p.inner - dc, band_lo_u);
        const double u1 = std::min(p.outer - dc, t);
        if (u1 > u0) {
            const double w = p.coeff * unit_sphere_area(n);
            const double e = n - 1.0 - p.beta;
            auto f = [&](double u) {
                return w * std::pow(dc + u, e) * shell_fraction_u(u);
            };
            total += tanh_sinh(f, u0, u1, 1e-10);
        }
    }
    return total;
}

} // namespace radpot
