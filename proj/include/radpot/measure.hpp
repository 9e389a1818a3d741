#pragma once

#include <vector>

#include "radpot/quadrature.hpp"

namespace radpot {

/// Annulus density: d(sigma) = coeff * |y|^(-beta) dy on inner <= |y| < outer.
/// outer may be +inf. A piece touching the origin (inner = 0) must have
/// beta < n for local finiteness; this is checked by validate_measure.
struct PowerPiece {
    double coeff = 0.0;
    double beta = 0.0;
    double inner = 0.0;
    double outer = kInf;
};

/// Uniform measure on the sphere |y| = radius with total mass `mass`.
struct ShellAtom {
    double radius = 1.0;
    double mass = 0.0;
};

/// Radially symmetric nonnegative Borel measure: finitely many power-law
/// annuli, finitely many spherical shells, and an optional point mass at 0.
struct RadialMeasure {
    std::vector<PowerPiece> pieces;
    std::vector<ShellAtom> atoms;
    double origin_mass = 0.0;

    bool is_zero() const;

    /// Smallest positive radius carrying mass (origin atom excluded);
    /// +inf when there is none.
    double min_positive_support() const;

    /// Supremum of the support; +inf for an unbounded piece, 0 for the
    /// zero measure or a pure origin atom.
    double support_sup() const;

    /// Radii where the radial structure changes: atom radii and finite
    /// piece bounds, sorted ascending, deduplicated.
    std::vector<double> breakpoints() const;
};

/// Throws ParameterError on nonpositive radii/masses, inner >= outer, or an
/// origin-touching piece with beta >= n.
void validate_measure(const RadialMeasure& sigma, int n);

/// t * sigma: every density coefficient, atom mass and the origin mass
/// multiplied by t; support unchanged.
RadialMeasure scale_measure(const RadialMeasure& sigma, double t);

/// sigma1 + sigma2 (component lists concatenated).
RadialMeasure add_measures(const RadialMeasure& a, const RadialMeasure& b);

/// sigma restricted to the open ball B(0, R): pieces truncated at R, atoms
/// with radius < R kept, origin atom kept.
RadialMeasure restrict_to_ball(const RadialMeasure& sigma, double R);

/// sigma(B(0, t)) for the OPEN ball. t = 0 gives 0 even with an origin
/// atom; atoms at radius exactly t are excluded.
double ball_mass(const RadialMeasure& sigma, double t, int n);

/// int_{a <= |y| < b} |y|^(-s) d sigma(y). Divergent integrals return +inf
/// (origin atom against s > 0, non-integrable power ranges, log cases at
/// the exact critical exponent).
double moment(const RadialMeasure& sigma, double s, double a, double b, int n);

/// sigma(B(x, t)) for any |x| = center_dist, via the spherical-cap fraction
/// of each radial shell. Reduces exactly to ball_mass when center_dist = 0.
double ball_mass_offcenter(const RadialMeasure& sigma, double center_dist, double t, int n);

/// Fraction of the unit sphere S^{n-1} with cos(theta) > cos_lim
/// (closed form via the sin-power reduction).
double cap_fraction(int n, double cos_lim);

} // namespace radpot
