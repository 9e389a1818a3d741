#include <doctest.h>

#include <cmath>

#include "catalog.hpp"
#include "radpot/criteria.hpp"
#include "radpot/errors.hpp"
#include "radpot/potentials.hpp"

using namespace radpot;

namespace {
const double kPi = 3.14159265358979323846;

/// Closed-form truth for a global power |y|^-beta: the local moment below
/// radius 1 converges iff beta < 2 alpha + d/gamma_i, the tail iff
/// beta > 2 alpha.
struct PowerOracle {
    bool tail_ok, local1_ok, local2_ok;
    PowerOracle(const ExponentSet& e, double beta)
        : tail_ok(beta > 2.0 * e.alpha),
          local1_ok(beta < 2.0 * e.alpha + e.d / e.gamma1),
          local2_ok(beta < 2.0 * e.alpha + e.d / e.gamma2)
    {
    }
    bool radialcond() const { return tail_ok && local1_ok && local2_ok; }
};

} // namespace

TEST_CASE("derive_exponents: values, identities, symmetry, domain errors")
{
    auto e = derive_exponents(3, 0.5, 0.5, 0.5);
    CHECK(e.gamma1 == 2.0);
    CHECK(e.gamma2 == 2.0);
    CHECK(e.r1 == 0.5);
    CHECK(e.d == 2.0);

    auto a = derive_exponents(3, 0.5, 0.5, 1.0 / 3.0);
    CHECK(cat::rel_err(a.gamma1, 9.0 / 5.0) < 1e-15);
    CHECK(cat::rel_err(a.gamma2, 8.0 / 5.0) < 1e-15);
    CHECK(cat::rel_err(a.r1, 4.0 / 9.0) < 1e-15);
    CHECK(cat::rel_err(a.r2, 3.0 / 8.0) < 1e-15);

    // swapping q1, q2 swaps the derived pairs
    auto b = derive_exponents(3, 0.5, 1.0 / 3.0, 0.5);
    CHECK(b.gamma1 == a.gamma2);
    CHECK(b.gamma2 == a.gamma1);
    CHECK(b.r1 == a.r2);

    CHECK_THROWS_AS(derive_exponents(3, 0.5, 1.0, 0.5), ParameterError);
    CHECK_THROWS_AS(derive_exponents(3, 0.5, 0.5, 0.0), ParameterError);
    CHECK_THROWS_AS(derive_exponents(3, 1.5, 0.5, 0.5), ParameterError);
    CHECK_THROWS_AS(derive_exponents(1, 0.4, 0.5, 0.5), ParameterError);
}

TEST_CASE("check_finpot: tail-moment screen")
{
    auto e = cat::e_sym_d2(); // 2 alpha = 1
    auto ok = check_finpot(cat::annulus(1.0, 2.0, 1.0, kInf), e);
    CHECK(ok.flag);
    CHECK(cat::rel_err(ok.value, 4.0 * kPi) < 1e-13);

    auto log_div = check_finpot(cat::annulus(1.0, 1.0, 1.0, kInf), e); // beta = 2 alpha
    CHECK(!log_div.flag);
    CHECK(log_div.value == kInf);

    CHECK(check_finpot(cat::shell(3.0, 2.0), e).flag); // compact support
}

TEST_CASE("check_finpot: Fubini equivalence with the defining integral")
{
    // int_1^inf sigma(B(0,t)) t^-d dt/t = (sigma(B(0,1)) + tail moment)/d
    auto e = cat::e_sym_d2();
    RadialMeasure m = add_measures(cat::unit_ball(0.5), cat::annulus(0.7, 2.5, 1.0, kInf));
    const double lhs = integrate_log_segmented(
        [&](double t) { return ball_mass(m, t, e.n) * std::pow(t, -e.d) / t; }, 1.0, 1e9,
        1e-9);
    const double rhs = (ball_mass(m, 1.0, e.n) + moment(m, e.d, 1.0, kInf, e.n)) / e.d;
    CHECK(cat::rel_err(lhs, rhs) < 1e-5); // truncation of the t-integral dominates
}

TEST_CASE("check_radialcond: examples")
{
    auto e = cat::e_sym_d2();
    auto good = check_radialcond(cat::global_power(1.5), e);
    CHECK(good.holds);
    CHECK(good.local1.flag);
    CHECK(good.tail.flag);

    auto orig = check_radialcond(cat::origin_atom(1.0), e);
    CHECK(!orig.holds);
    CHECK(!orig.local1.flag);
    CHECK(orig.local1.value == kInf);

    auto logtail = check_radialcond(cat::global_power(1.0), e);
    CHECK(!logtail.holds);
    CHECK(!logtail.tail.flag);
}

TEST_CASE("check_limc: global powers inside the band are BOUNDED with the exact limit")
{
    auto e = cat::e_sym_d2();
    const double beta = 1.5; // band is (1, 2)
    auto res = check_limc(cat::global_power(beta), e, limc_sample_radii(cat::global_power(beta)));
    for (int i = 0; i < 2; ++i) {
        CHECK(res[i].classification == LimcClass::Bounded);
        // ratio tends to (beta - 2a) / (2a + d/gamma - beta)
        const double want = (beta - 1.0) / (2.0 - beta);
        CHECK(cat::rel_err(res[i].estimated_limsup, want) < 1e-6);
    }
}

TEST_CASE("check_limc: shell-only measures are BOUNDED by the vanishing numerator")
{
    auto e = cat::e_sym_d2();
    auto s = cat::shell(1.0, 1.0);
    auto res = check_limc(s, e, limc_sample_radii(s));
    CHECK(res[0].classification == LimcClass::Bounded);
    CHECK(res[0].note == "numerator vanishes near the origin");
}

TEST_CASE("check_limc: local divergence is DIVERGENT")
{
    auto e = cat::e_sym_d2();
    auto p = cat::global_power(2.5); // above the band: local moment infinite
    auto res = check_limc(p, e, limc_sample_radii(p));
    CHECK(res[0].classification == LimcClass::Divergent);
    CHECK(res[0].estimated_limsup == kInf);
}

TEST_CASE("check_limc: the lacunary counterexample separates radialcond from limc")
{
    auto e = cat::e_sym_d2();
    auto lac = cat::lacunary(e);
    CHECK(check_radialcond(lac, e).holds);
    auto res = check_limc(lac, e, limc_sample_radii(lac));
    CHECK(res[0].classification == LimcClass::Divergent);
    CHECK(res[1].classification == LimcClass::Divergent);

    // brute-force confirmation at the deepest atom bracket: the ratio
    // computed by direct summation over the atoms exceeds the threshold
    const double rho_last = lac.atoms.back().radius;
    const double x = rho_last * (1.0 + 1e-9);
    double num = 0.0, den = 0.0;
    for (const auto& at : lac.atoms) {
        if (at.radius < x) num += at.mass * std::pow(at.radius, -e.d * e.r1);
        if (at.radius >= x) den += at.mass * std::pow(at.radius, -e.d);
    }
    const double ratio = std::pow(x, -e.d / e.gamma1) * num / den;
    CHECK(ratio > kDivergenceThreshold);
}

TEST_CASE("check_limc: classification is scale invariant")
{
    auto e = cat::e_sym_d2();
    for (const auto& m : {cat::global_power(1.5), cat::lacunary(e)}) {
        auto base = check_limc(m, e, limc_sample_radii(m));
        for (double t : {0.1, 10.0}) {
            auto scaled_m = scale_measure(m, t);
            auto scaled = check_limc(scaled_m, e, limc_sample_radii(scaled_m));
            CHECK(scaled[0].classification == base[0].classification);
            CHECK(scaled[1].classification == base[1].classification);
        }
    }
}

TEST_CASE("check_con2: single shell constant approaches 1")
{
    auto e = cat::e_sym_d2();
    auto s = cat::shell(1.0, 1.0);
    auto grid = make_criteria_grid(s);
    auto res = check_con2(s, e, grid);
    CHECK(res[0].flag);
    CHECK(res[0].value == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(res[1].flag);

    auto zero = check_con2(RadialMeasure{}, e, grid);
    CHECK(zero[0].flag);
    CHECK(zero[0].value == 0.0);
}

TEST_CASE("check_c114: shell passes, lacunary fails")
{
    auto e = cat::e_sym_d2();
    auto s = cat::shell(1.0, 1.0);
    auto res = check_c114(s, e, make_criteria_grid(s));
    CHECK(res[0].flag);
    CHECK(res[1].flag);

    auto lac = cat::lacunary(e);
    auto bad = check_c114(lac, e, make_criteria_grid(lac));
    CHECK(!bad[0].flag);

    auto zero = check_c114(RadialMeasure{}, e, make_criteria_grid(s));
    CHECK(zero[0].flag);
}

TEST_CASE("criteria: radialcond local flag flips exactly at beta = 2a + d/gamma_i")
{
    auto e = cat::e_asym(); // gamma1 = 9/5, gamma2 = 8/5, d = 2, 2a = 1
    const double flip1 = 2.0 * e.alpha + e.d / e.gamma1; // 1 + 10/9
    const double flip2 = 2.0 * e.alpha + e.d / e.gamma2; // 1 + 5/4
    for (double beta = 1.05; beta < 2.6; beta += 0.05) {
        auto rc = check_radialcond(cat::global_power(beta), e);
        CHECK(rc.local1.flag == (beta < flip1));
        CHECK(rc.local2.flag == (beta < flip2));
        CHECK(rc.tail.flag == (beta > 2.0 * e.alpha));
    }
}

TEST_CASE("criteria: equivalence chain on power cases and the lacunary example")
{
    // c114 flag == con2 flag == (limc BOUNDED and tail finite),
    // the numerical embodiment of the section-3 lemmas
    for (const auto& e : {cat::e_sym_d2(), cat::e_asym()}) {
        std::vector<RadialMeasure> measures;
        const double band_hi = 2.0 * e.alpha + e.d / std::max(e.gamma1, e.gamma2);
        measures.push_back(cat::global_power(0.5 * 2.0 * e.alpha)); // tail fails
        measures.push_back(cat::global_power(2.0 * e.alpha));       // critical tail
        measures.push_back(cat::global_power(0.5 * (2.0 * e.alpha + band_hi))); // inside
        measures.push_back(cat::global_power(band_hi + 0.3));       // local fails
        measures.push_back(cat::shell(1.0, 1.0));
        measures.push_back(cat::lacunary(e));
        for (const auto& m : measures) {
            auto grid = make_criteria_grid(m);
            auto rep = run_criteria(m, e, grid);
            const bool via_limc = rep.limc[0].classification == LimcClass::Bounded &&
                                  rep.limc[1].classification == LimcClass::Bounded &&
                                  rep.limc_tail_finite;
            const bool via_con2 = rep.con2[0].flag && rep.con2[1].flag;
            const bool via_c114 = rep.c114[0].flag && rep.c114[1].flag;
            CHECK(via_con2 == via_limc);
            CHECK(via_c114 == via_limc);
        }
    }
}
