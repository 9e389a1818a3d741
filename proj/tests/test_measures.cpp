#include <doctest.h>

#include <cmath>
#include <random>

#include "catalog.hpp"
#include "radpot/errors.hpp"
#include "radpot/measure.hpp"

using namespace radpot;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("ball_mass: open-ball convention and closed forms")
{
    auto s = cat::shell(1.0, 2.0);
    CHECK(ball_mass(s, 2.0, 3) == 2.0);   // whole atom inside
    CHECK(ball_mass(s, 1.0, 3) == 0.0);   // boundary atom excluded
    CHECK(ball_mass(s, 0.5, 3) == 0.0);

    auto p = cat::annulus(1.0, 1.0, 0.0, 1.0);
    CHECK(cat::rel_err(ball_mass(p, 0.5, 3), kPi / 2.0) < 1e-14);

    auto o = cat::origin_atom(3.0);
    CHECK(ball_mass(o, 0.0, 3) == 0.0); // open ball of radius 0 is empty
    CHECK(ball_mass(o, 1e-12, 3) == 3.0);
}

TEST_CASE("ball_mass: log antiderivative at beta = n on an annulus")
{
    auto p = cat::annulus(1.0, 3.0, 1.0, std::exp(1.0));
    const double want = 4.0 * kPi; // 4 pi ln(e/1)
    CHECK(cat::rel_err(ball_mass(p, 10.0, 3), want) < 1e-14);
}

TEST_CASE("moment: examples and divergence conventions")
{
    auto s = cat::shell(2.0, 3.0);
    CHECK(moment(s, 1.0, 1.0, 3.0, 3) == 1.5);
    CHECK(moment(s, 1.0, 1.0, 2.0, 3) == 0.0); // upper-open range excludes rho = 2
    CHECK(moment(s, 1.0, 2.0, 3.0, 3) == 1.5); // lower-closed includes it

    auto p = cat::annulus(1.0, 1.0, std::exp(-1.0), 1.0);
    CHECK(cat::rel_err(moment(p, 2.0, 0.0, 1.0, 3), 4.0 * kPi) < 1e-14);

    auto o = cat::origin_atom(1.0);
    CHECK(moment(o, 1.0, 0.0, 1.0, 3) == kInf);
    CHECK(moment(o, 0.0, 0.0, 1.0, 3) == 1.0);
    CHECK(moment(o, -1.0, 0.0, 1.0, 3) == 0.0);

    // divergent power ranges are explicit infinities
    CHECK(moment(cat::global_power(1.0), 2.0, 1.0, kInf, 3) == kInf);
    CHECK(moment(cat::global_power(3.5), 1.0, 0.0, 1.0, 3) == kInf);

    CHECK_THROWS_AS(moment(o, 0.0, 1.0, 1.0, 3), ParameterError);
}

TEST_CASE("ball_mass_offcenter: cap geometry")
{
    auto s = cat::shell(1.0, 1.0);
    // cos(theta*) = 1/2 -> cap fraction 1/4
    CHECK(cat::rel_err(ball_mass_offcenter(s, 1.0, 1.0, 3), 0.25) < 1e-12);

    // full containment
    auto ball = cat::unit_ball();
    const double total = ball_mass(ball, 2.0, 3);
    CHECK(cat::rel_err(ball_mass_offcenter(ball, 0.5, 3.0, 3), total) < 1e-12);

    // centered case delegates exactly
    for (double t : {0.3, 1.0, 2.5})
        CHECK(ball_mass_offcenter(ball, 0.0, t, 3) == ball_mass(ball, t, 3));

    // interior point, small ball fully inside the support
    CHECK(cat::rel_err(ball_mass_offcenter(ball, 0.3, 0.5, 3), 4.0 * kPi / 3.0 * 0.125) <
          1e-12);
}

TEST_CASE("ball_mass_offcenter: no cancellation at tiny radii")
{
    auto ball = cat::unit_ball();
    for (double t : {1e-6, 1e-9, 1e-12}) {
        const double got = ball_mass_offcenter(ball, 0.3, t, 3);
        const double want = 4.0 * kPi / 3.0 * t * t * t; // local density 1
        CHECK(cat::rel_err(got, want) < 1e-8);
    }
}

TEST_CASE("cap_fraction agrees with direct quadrature of sin^(n-2)")
{
    for (int n : {2, 3, 4, 5, 7}) {
        for (double c : {-0.9, -0.3, 0.0, 0.4, 0.8, 0.999}) {
            const double got = cap_fraction(n, c);
            const double theta = std::acos(c);
            const double want =
                integrate_adaptive([&](double t) { return std::pow(std::sin(t), n - 2.0); },
                                   0.0, theta, 1e-12) /
                sin_power_total(n - 2);
            CHECK(cat::rel_err(got, want) < 1e-9);
        }
    }
}

TEST_CASE("scale_measure: linearity of all mass operations")
{
    auto s = cat::shell(1.0, 2.0);
    auto s3 = scale_measure(s, 3.0);
    CHECK(s3.atoms[0].mass == 6.0);
    CHECK(s3.atoms[0].radius == 1.0);

    RadialMeasure mix = add_measures(cat::unit_ball(0.5), cat::shell(2.0, 1.5));
    const double t = 2.7;
    auto scaled = scale_measure(mix, t);
    for (int k = 0; k < 64; ++k) {
        const double r = 0.01 * std::pow(1.15, k);
        CHECK(cat::rel_err(ball_mass(scaled, r, 3), t * ball_mass(mix, r, 3)) < 1e-12);
        CHECK(cat::rel_err(ball_mass_offcenter(scaled, 0.7, r, 3),
                           t * ball_mass_offcenter(mix, 0.7, r, 3)) < 1e-9);
    }
    CHECK(cat::rel_err(moment(scaled, 1.2, 0.1, 10.0, 3), t * moment(mix, 1.2, 0.1, 10.0, 3)) <
          1e-12);
    CHECK_THROWS_AS(scale_measure(mix, 0.0), ParameterError);
}

TEST_CASE("properties: monotonicity, additivity, moment consistency")
{
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> unif(0.1, 2.0);
    for (int rep = 0; rep < 20; ++rep) {
        RadialMeasure a = cat::shell(unif(rng), unif(rng));
        RadialMeasure b = cat::annulus(unif(rng), unif(rng), 0.0, unif(rng) + 0.2);
        RadialMeasure both = add_measures(a, b);

        double prev = 0.0;
        for (int k = 0; k < 64; ++k) {
            const double r = 0.01 * std::pow(1.2, k);
            const double m = ball_mass(both, r, 3);
            CHECK(m >= prev);
            prev = m;
            CHECK(cat::rel_err(m, ball_mass(a, r, 3) + ball_mass(b, r, 3)) < 1e-12);
            // moment with zero weight equals the open-ball mass
            CHECK(cat::rel_err(moment(both, 0.0, 0.0, r, 3), m) < 1e-12);
        }

        // off-center mass is nondecreasing in t
        double prev_off = 0.0;
        for (int k = 0; k < 32; ++k) {
            const double t = 0.05 * std::pow(1.25, k);
            const double m = ball_mass_offcenter(both, 0.9, t, 3);
            CHECK(m >= prev_off * (1.0 - 1e-12));
            prev_off = m;
        }
    }
}

TEST_CASE("validate_measure: rejects malformed components")
{
    RadialMeasure bad;
    bad.pieces.push_back({1.0, 3.5, 0.0, 1.0}); // beta >= n touching the origin
    CHECK_THROWS_AS(validate_measure(bad, 3), ParameterError);

    RadialMeasure bad2;
    bad2.pieces.push_back({1.0, 0.0, 2.0, 1.0}); // inner >= outer
    CHECK_THROWS_AS(validate_measure(bad2, 3), ParameterError);

    RadialMeasure bad3;
    bad3.atoms.push_back({-1.0, 1.0});
    CHECK_THROWS_AS(validate_measure(bad3, 3), ParameterError);

    CHECK_NOTHROW(validate_measure(cat::unit_ball(2.5), 3));
}

TEST_CASE("restrict_to_ball keeps the open-ball part")
{
    RadialMeasure m = add_measures(cat::global_power(1.5), cat::shell(2.0, 1.0));
    m.origin_mass = 0.5;
    auto r = restrict_to_ball(m, 2.0);
    CHECK(r.atoms.empty()); // shell at exactly 2 excluded
    CHECK(r.pieces.size() == 1);
    CHECK(r.pieces[0].outer == 2.0);
    CHECK(r.origin_mass == 0.5);
    CHECK(cat::rel_err(ball_mass(r, 5.0, 3), ball_mass(m, 2.0, 3)) < 1e-14);
}
