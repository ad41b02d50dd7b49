#include <cmath>
#include <string>

#include "doctest.h"
#include "mwi/report.hpp"
#include "mwi/scenario.hpp"

using namespace mwi;

namespace {
const char* kMinimal =
    "name = minimal\n"
    "device = atom\n"
    "frame = lab\n"
    "params.m = 2.2e-25\n"
    "params.g = 9.8\n"
    "params.T = 0.1\n"
    "params.kappa = 1.6e7\n";
}

TEST_CASE("minimal scenario parses with defaults applied") {
    const Scenario s = parse_scenario(kMinimal);
    CHECK(s.name == "minimal");
    CHECK(s.devices.size() == 1);
    CHECK(s.frames.size() == 1);
    CHECK(s.params.v_x0 == 0.0);
    CHECK(s.params.c == doctest::Approx(2.99792458e8));
    CHECK(s.params.hbar == doctest::Approx(1.054571817e-34));
    CHECK_FALSE(s.chirp.enabled);
}

TEST_CASE("parse diagnostics carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_scenario("params.m = 1\nbogus line\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_scenario(std::string(kMinimal) + "params.T = abc\n"),
                         doctest::Contains("line 8"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_scenario(std::string(kMinimal) + "mystery.key = 1\n"),
                         doctest::Contains("mystery.key"), std::invalid_argument);
}

TEST_CASE("missing required parameters are rejected") {
    CHECK_THROWS_AS(parse_scenario("device = atom\nparams.m = 1e-25\n"), std::invalid_argument);
}

TEST_CASE("chirp on the neutron device is rejected at parse time") {
    const std::string text = std::string(kMinimal) + "device = neutron\nchirp.enabled = true\n";
    CHECK_THROWS_WITH_AS(parse_scenario(text), doctest::Contains("atom"),
                         std::invalid_argument);
}

TEST_CASE("comments and blank lines are ignored") {
    const std::string text = std::string("# header comment\n\n") + kMinimal +
                             "params.g = 4.9  # override with comment\n";
    CHECK(parse_scenario(text).params.g == 4.9);
}

TEST_CASE("sweep expansion produces one configuration per combination") {
    const std::string text = std::string(kMinimal) +
                             "device = both\nframe = both\nsweep.g = 4.9, 9.8\n";
    const ScenarioReport rep = run_scenario(parse_scenario(text));
    CHECK(rep.results.size() == 2 * 2 * 2);
    for (std::size_t i = 0; i < rep.results.size(); ++i) CHECK(rep.results[i].index == i);
}

TEST_CASE("four-situations demo: universal phase and the delta_tau pattern") {
    const ScenarioReport rep = run_scenario(four_situations_scenario());
    REQUIRE(rep.results.size() == 4);
    const ExperimentParams& p = rep.results[0].params;
    const double R = p.fringe_phase();
    const double dtau_n = 4.0 * p.v_y0() * p.g * p.T * p.T / (p.c * p.c);
    for (const ConfigResult& r : rep.results) {
        CHECK(r.phase.total == doctest::Approx(-R).epsilon(1e-12));
        const double expect = (r.device == Device::NeutronCOW) ? dtau_n : 0.0;
        CHECK(r.propertime.delta_tau == doctest::Approx(expect).epsilon(1e-12));
        CHECK(r.closure_gap <= 1e-12);
        CHECK_FALSE(r.trajectory.empty());
    }
    CHECK(rep.within_tolerance());
}

TEST_CASE("g = 0 scenario yields zero phases and zero delta_tau") {
    const std::string text = std::string(kMinimal) + "device = both\nparams.g = 0\n";
    const ScenarioReport rep = run_scenario(parse_scenario(text));
    for (const ConfigResult& r : rep.results) {
        CHECK(r.phase.total == 0.0);
        CHECK(r.propertime.delta_tau == 0.0);
    }
}

TEST_CASE("g sweep reports a residual scaling exponent near 2") {
    const std::string text = std::string(kMinimal) + "sweep.g = 2.45, 4.9, 9.8, 19.6\n";
    const ScenarioReport rep = run_scenario(parse_scenario(text));
    REQUIRE_FALSE(std::isnan(rep.residual_scaling_exponent));
    CHECK(rep.residual_scaling_exponent == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("json output round-trips byte-identically") {
    Scenario s = four_situations_scenario();
    s.sweeps["g"] = {4.9, 9.8};
    const ScenarioReport rep = run_scenario(s);
    const std::string once = emit_json(rep);
    const std::string twice = emit_json(parse_report_json(once));
    CHECK(once == twice);
}

TEST_CASE("csv has the documented columns and one row per sample") {
    const ScenarioReport rep = run_scenario(four_situations_scenario());
    const std::string csv = emit_csv(rep);
    CHECK(csv.find("t,y_upper,y_lower,v_upper,v_lower,frame,device\n") != std::string::npos);
    std::size_t rows = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    CHECK(rows == 2 + 4 * rep.results[0].trajectory.size());
}

TEST_CASE("table output reports overall status") {
    const ScenarioReport rep = run_scenario(four_situations_scenario());
    CHECK(emit_table(rep).find("status: OK") != std::string::npos);
}

TEST_CASE("malformed report json is rejected") {
    CHECK_THROWS_AS(parse_report_json("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_report_json("{\"schema_version\":1}"), std::invalid_argument);
}

TEST_CASE("invariant suite passes clean and fails under an injected sign error") {
    for (const CheckItem& c : run_checks()) {
        INFO(c.name);
        CHECK(c.pass);
    }
    for (SignError e : {SignError::ProperTime, SignError::Sliding, SignError::GoldenRule}) {
        bool any_fail = false;
        for (const CheckItem& c : run_checks(e)) any_fail = any_fail || !c.pass;
        CHECK(any_fail);
    }
    CHECK(sign_error_from_name("sliding") == SignError::Sliding);
    CHECK_THROWS_AS(sign_error_from_name("nope"), std::invalid_argument);
}
