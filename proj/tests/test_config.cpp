#include <doctest.h>

#include "radpot/config.hpp"

using namespace radpot;

namespace {

const char* kMinimal = R"({
  "exponents": {"n": 3, "alpha": 0.5, "q1": 0.5, "q2": 0.5},
  "sigma": [{"shell": {"rho": 1.0, "m": 1.0}}]
})";

bool has_error_matching(const ConfigError& e, const std::string& needle)
{
    for (const auto& msg : e.errors())
        if (msg.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("parse_config: minimal valid config")
{
    auto cfg = parse_config_text(kMinimal);
    CHECK(cfg.n == 3);
    CHECK(cfg.alpha == 0.5);
    CHECK(cfg.sigma.atoms.size() == 1);
    CHECK(cfg.sigma.atoms[0].mass == 1.0);
    CHECK(!cfg.mu1.has_value());
    CHECK(cfg.grid.points == 257); // defaults
    CHECK(cfg.solve.tol == 1e-8);
}

TEST_CASE("parse_config: q out of range rejected naming the bound")
{
    const char* bad = R"({
      "exponents": {"n": 3, "alpha": 0.5, "q1": 1.0, "q2": 0.5},
      "sigma": [{"shell": {"rho": 1.0, "m": 1.0}}]
    })";
    try {
        parse_config_text(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(has_error_matching(e, "(0,1)"));
    }
}

TEST_CASE("parse_config: b = \"inf\" parses as an unbounded annulus")
{
    const char* cfg_text = R"({
      "exponents": {"n": 3, "alpha": 0.5, "q1": 0.5, "q2": 0.5},
      "sigma": [{"power": {"c": 1.0, "beta": 1.5, "a": 0.0, "b": "inf"}}]
    })";
    auto cfg = parse_config_text(cfg_text);
    CHECK(cfg.sigma.pieces.size() == 1);
    CHECK(cfg.sigma.pieces[0].outer == kInf);
}

TEST_CASE("parse_config: strict mode rejects unknown keys at every level")
{
    const char* unknown_top = R"({
      "exponents": {"n": 3, "alpha": 0.5, "q1": 0.5, "q2": 0.5},
      "sigma": [{"shell": {"rho": 1.0, "m": 1.0}}],
      "grd": {}
    })";
    CHECK_THROWS_AS(parse_config_text(unknown_top), ConfigError);

    const char* unknown_nested = R"({
      "exponents": {"n": 3, "alpha": 0.5, "q1": 0.5, "q2": 0.5, "gamma": 2.0},
      "sigma": [{"shell": {"rho": 1.0, "m": 1.0}}]
    })";
    try {
        parse_config_text(unknown_nested);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(has_error_matching(e, "gamma"));
    }

    const char* unknown_component = R"({
      "exponents": {"n": 3, "alpha": 0.5, "q1": 0.5, "q2": 0.5},
      "sigma": [{"blob": {"x": 1.0}}]
    })";
    CHECK_THROWS_AS(parse_config_text(unknown_component), ConfigError);
}

TEST_CASE("parse_config: multiple field errors are all reported")
{
    const char* bad = R"({
      "exponents": {"n": 3, "alpha": -1.0, "q1": 0.5},
      "sigma": [{"shell": {"rho": 1.0}}]
    })";
    try {
        parse_config_text(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.errors().size() >= 2);
    }
}

TEST_CASE("parse_config: sweep section")
{
    const char* sweep = R"({
      "exponents": {"n": 3, "alpha": 0.5, "q1": 0.5, "q2": 0.5},
      "sigma": [{"power": {"c": 1.0, "beta": 1.5, "a": 0.0, "b": "inf"}}],
      "sweep": {"param": "beta", "from": 1.1, "to": 1.9, "step": 0.1}
    })";
    auto cfg = parse_config_text(sweep);
    REQUIRE(cfg.sweep.has_value());
    CHECK(cfg.sweep->param == "beta");
    CHECK(cfg.sweep->values.size() == 9);
    CHECK(cfg.sweep->run == "check");

    const char* values = R"({
      "exponents": {"n": 3, "alpha": 0.5, "q1": 0.5, "q2": 0.5},
      "sigma": [{"shell": {"rho": 1.0, "m": 1.0}}],
      "sweep": {"param": "q1", "values": [0.3, 0.5, 0.7], "run": "solve"}
    })";
    auto cfg2 = parse_config_text(values);
    CHECK(cfg2.sweep->values.size() == 3);
    CHECK(cfg2.sweep->run == "solve");

    CHECK_THROWS_AS(parse_config_text(R"({
      "exponents": {"n": 3, "alpha": 0.5, "q1": 0.5, "q2": 0.5},
      "sigma": [{"shell": {"rho": 1.0, "m": 1.0}}],
      "sweep": {"param": "banana", "values": [1.0]}
    })"),
                    ConfigError);
}

TEST_CASE("parse_config: malformed JSON and measure domain violations")
{
    CHECK_THROWS_AS(parse_config_text("{ not json"), ConfigError);
    // origin-touching piece with beta >= n
    CHECK_THROWS_AS(parse_config_text(R"({
      "exponents": {"n": 3, "alpha": 0.5, "q1": 0.5, "q2": 0.5},
      "sigma": [{"power": {"c": 1.0, "beta": 3.5, "a": 0.0, "b": 1.0}}]
    })"),
                    ConfigError);
}
