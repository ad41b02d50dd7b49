#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mwi/phase.hpp"

namespace mwi {

// Declarative scenario: which device/frame combinations to run, with which
// parameters, optionally swept over {g, T, kappa, m}. Parsed from a flat
// line-oriented `key = value` document (see README for the schema).
struct Scenario {
    std::string name = "scenario";
    std::vector<Device> devices{Device::AtomKC};
    std::vector<Frame> frames{Frame::Lab, Frame::FreeFall};
    ChirpSetting chirp;
    ExperimentParams params{};
    std::map<std::string, std::vector<double>> sweeps;   // keys: g, T, kappa, m
    std::set<std::string> outputs{"phase", "propertime"};
    std::size_t trajectory_samples = 17;
    double tolerance = 1e-9;
};

// Throws std::invalid_argument with a line/field diagnostic on malformed
// input, and on domain violations (chirp on neutron, non-positive T, ...).
Scenario parse_scenario(std::string_view text);

// Built-in demo: both devices, both frames, desk-scale parameters.
Scenario four_situations_scenario();

struct ConfigResult {
    std::size_t index;
    Device device;
    Frame frame;
    ExperimentParams params;
    PhaseBreakdown phase;
    ProperTimeResult propertime;
    double closure_gap;
    // Per-arm proper-time quadrature residual vs closed form; scales as g^2.
    double oracle_residual;
    // Neglected trajectory-bending term (arc minus chord); scales as g^2.
    double trajectory_residual;
    std::vector<std::array<double, 5>> trajectory;   // t, y_u, y_l, v_u, v_l
};

struct ScenarioReport {
    int schema_version = 1;
    std::string name;
    double tolerance = 1e-9;
    std::vector<ConfigResult> results;
    // log-log slope of oracle_residual vs g across a g sweep; NaN when the
    // scenario has no usable g sweep.
    double residual_scaling_exponent;

    bool within_tolerance() const;
};

ScenarioReport run_scenario(const Scenario& s);

// Invariant suite behind the `check` CLI verb. A sign error can be injected
// into one route to prove the suite actually discriminates.
enum class SignError { None, ProperTime, Sliding, GoldenRule };
SignError sign_error_from_name(std::string_view name);

struct CheckItem {
    std::string name;
    double value;       // observed discrepancy
    double tolerance;
    bool pass;
};

std::vector<CheckItem> run_checks(SignError inject = SignError::None);

}  // namespace mwi
