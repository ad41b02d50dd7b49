#include "mwi/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mwi/lattice.hpp"

namespace mwi {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
    throw std::invalid_argument("scenario parse error (line " + std::to_string(line) + "): " + msg);
}

std::string trim(std::string s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& v, std::size_t line) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        parse_fail(line, "expected a number, got '" + v + "'");
    }
    if (pos != v.size()) parse_fail(line, "trailing characters after number in '" + v + "'");
    return x;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    Scenario s;
    bool have_m = false, have_g = false, have_T = false, have_kappa = false;

    std::stringstream ss{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        raw = trim(raw);
        if (raw.empty()) continue;

        const auto eq = raw.find('=');
        if (eq == std::string::npos) parse_fail(lineno, "expected 'key = value'");
        const std::string key = trim(raw.substr(0, eq));
        const std::string val = trim(raw.substr(eq + 1));
        if (key.empty()) parse_fail(lineno, "empty key");
        if (val.empty()) parse_fail(lineno, "empty value for '" + key + "'");

        if (key == "name") {
            s.name = val;
        } else if (key == "device") {
            if (val == "atom") s.devices = {Device::AtomKC};
            else if (val == "neutron") s.devices = {Device::NeutronCOW};
            else if (val == "both") s.devices = {Device::AtomKC, Device::NeutronCOW};
            else parse_fail(lineno, "device must be atom | neutron | both");
        } else if (key == "frame") {
            if (val == "lab") s.frames = {Frame::Lab};
            else if (val == "freefall") s.frames = {Frame::FreeFall};
            else if (val == "both") s.frames = {Frame::Lab, Frame::FreeFall};
            else parse_fail(lineno, "frame must be lab | freefall | both");
        } else if (key == "params.m") {
            s.params.m = parse_number(val, lineno); have_m = true;
        } else if (key == "params.g") {
            s.params.g = parse_number(val, lineno); have_g = true;
        } else if (key == "params.T") {
            s.params.T = parse_number(val, lineno); have_T = true;
        } else if (key == "params.kappa") {
            s.params.kappa = parse_number(val, lineno); have_kappa = true;
        } else if (key == "params.v_x0") {
            s.params.v_x0 = parse_number(val, lineno);
        } else if (key == "params.c") {
            s.params.c = parse_number(val, lineno);
        } else if (key == "params.hbar") {
            s.params.hbar = parse_number(val, lineno);
        } else if (key == "chirp.enabled") {
            if (val == "true") s.chirp.enabled = true;
            else if (val == "false") s.chirp.enabled = false;
            else parse_fail(lineno, "chirp.enabled must be true | false");
        } else if (key == "chirp.omega_dot") {
            s.chirp.omega_dot = parse_number(val, lineno);
        } else if (key.rfind("sweep.", 0) == 0) {
            const std::string which = key.substr(6);
            if (which != "g" && which != "T" && which != "kappa" && which != "m")
                parse_fail(lineno, "sweep key must be one of g, T, kappa, m");
            std::vector<double> values;
            for (const auto& item : split_list(val)) values.push_back(parse_number(item, lineno));
            if (values.empty()) parse_fail(lineno, "sweep list must be non-empty");
            s.sweeps[which] = values;
        } else if (key == "outputs") {
            s.outputs.clear();
            for (const auto& item : split_list(val)) {
                if (item != "phase" && item != "propertime" && item != "trajectories" &&
                    item != "lattice-check" && item != "estimates")
                    parse_fail(lineno, "unknown output '" + item + "'");
                s.outputs.insert(item);
            }
        } else if (key == "trajectories.samples") {
            const double n = parse_number(val, lineno);
            if (!(n >= 2.0 && n == std::floor(n)))
                parse_fail(lineno, "trajectories.samples must be an integer >= 2");
            s.trajectory_samples = static_cast<std::size_t>(n);
        } else if (key == "tolerance") {
            s.tolerance = parse_number(val, lineno);
        } else {
            parse_fail(lineno, "unknown key '" + key + "'");
        }
    }

    if (!have_m || !have_g || !have_T || !have_kappa)
        throw std::invalid_argument("scenario: params.m, params.g, params.T, params.kappa are required");
    if (s.chirp.enabled &&
        std::find(s.devices.begin(), s.devices.end(), Device::NeutronCOW) != s.devices.end())
        throw std::invalid_argument("scenario: chirp is defined for the atom device only");
    s.params.validate();
    return s;
}

Scenario four_situations_scenario() {
    Scenario s;
    s.name = "four-situations";
    s.devices = {Device::AtomKC, Device::NeutronCOW};
    s.frames = {Frame::Lab, Frame::FreeFall};
    s.params = {2.2e-25, 9.8, 0.1, 1.6e7};
    s.outputs = {"phase", "propertime", "trajectories"};
    s.trajectory_samples = 9;
    return s;
}

namespace {

double per_arm_residual(DeviceFrame df, const ExperimentParams& p) {
    const QuadratureSpec q{};
    const ProperTimeResult cf = proper_time_closed_form(df, p);
    const ProperTimeResult orc = proper_time_oracle(df, p, q);
    return std::max(std::fabs(orc.tau_upper - cf.tau_upper),
                    std::fabs(orc.tau_lower - cf.tau_lower));
}

}  // namespace

ScenarioReport run_scenario(const Scenario& s) {
    ScenarioReport rep;
    rep.name = s.name;
    rep.tolerance = s.tolerance;
    rep.residual_scaling_exponent = std::numeric_limits<double>::quiet_NaN();

    // Sweep expansion: cross product in fixed key order, sweeps outermost.
    const char* order[] = {"g", "T", "kappa", "m"};
    std::vector<ExperimentParams> param_sets{s.params};
    for (const char* key : order) {
        const auto it = s.sweeps.find(key);
        if (it == s.sweeps.end()) continue;
        std::vector<ExperimentParams> next;
        for (const ExperimentParams& base : param_sets) {
            for (double v : it->second) {
                ExperimentParams pm = base;
                if (std::string_view(key) == "g") pm.g = v;
                else if (std::string_view(key) == "T") pm.T = v;
                else if (std::string_view(key) == "kappa") pm.kappa = v;
                else pm.m = v;
                next.push_back(pm);
            }
        }
        param_sets = std::move(next);
    }

    const QuadratureSpec q{};
    std::size_t index = 0;
    for (const ExperimentParams& pm : param_sets) {
        for (Device dev : s.devices) {
            for (Frame fr : s.frames) {
                const DeviceFrame df{dev, fr};
                ConfigResult r;
                r.index = index++;
                r.device = dev;
                r.frame = fr;
                r.params = pm;
                try {
                    const ChirpSetting chirp =
                        (dev == Device::AtomKC) ? s.chirp : ChirpSetting{};
                    r.phase = detected_phase(df, pm, chirp);
                    r.propertime = proper_time_closed_form(df, pm);
                    r.closure_gap = mwi::closure_gap(df, pm);
                    r.oracle_residual = per_arm_residual(df, pm);
                    r.trajectory_residual = trajectory_term_residual(df, pm, q);
                    if (s.outputs.count("trajectories")) {
                        auto [upper, lower] = build_paths(df, pm);
                        const double t_end = upper.duration();
                        const std::size_t n = s.trajectory_samples;
                        for (std::size_t i = 0; i < n; ++i) {
                            const double t =
                                t_end * static_cast<double>(i) / static_cast<double>(n - 1);
                            const PathState u = upper.evaluate(t);
                            const PathState l = lower.evaluate(t);
                            r.trajectory.push_back({t, u.y, l.y, u.v, l.v});
                        }
                    }
                } catch (const std::exception& e) {
                    throw std::runtime_error(
                        "scenario '" + rep.name + "' configuration " + std::to_string(r.index) +
                        " (" + std::string(to_string(dev)) + ", " + std::string(to_string(fr)) +
                        "): " + e.what());
                }
                rep.results.push_back(std::move(r));
            }
        }
    }

    // g-sweep residual scaling: least-squares slope of ln(residual) vs ln(g)
    // on the first device/frame slot with nonzero residuals throughout.
    const auto git = s.sweeps.find("g");
    if (git != s.sweeps.end() && git->second.size() >= 2) {
        const std::size_t per_g = rep.results.size() / git->second.size();
        for (std::size_t slot = 0; slot < per_g; ++slot) {
            std::vector<double> lg, lr;
            bool usable = true;
            for (std::size_t gi = 0; gi < git->second.size(); ++gi) {
                const double g = git->second[gi];
                const double r = rep.results[gi * per_g + slot].oracle_residual;
                if (!(g > 0.0 && r > 0.0)) { usable = false; break; }
                lg.push_back(std::log(g));
                lr.push_back(std::log(r));
            }
            if (!usable) continue;
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            const double n = static_cast<double>(lg.size());
            for (std::size_t i = 0; i < lg.size(); ++i) {
                sx += lg[i]; sy += lr[i]; sxx += lg[i] * lg[i]; sxy += lg[i] * lr[i];
            }
            const double denom = n * sxx - sx * sx;
            if (denom != 0.0) {
                rep.residual_scaling_exponent = (n * sxy - sx * sy) / denom;
                break;
            }
        }
    }
    return rep;
}

bool ScenarioReport::within_tolerance() const {
    for (const ConfigResult& r : results) {
        const auto finite = [](double x) { return std::isfinite(x); };
        if (!finite(r.phase.total) || !finite(r.propertime.delta_tau) ||
            !finite(r.oracle_residual) || !finite(r.trajectory_residual))
            return false;
        const double scale = std::max(1.0, std::fabs(r.params.fringe_phase()));
        if (!(r.phase.route_agreement <= tolerance * scale)) return false;
        if (!(r.closure_gap <= tolerance * std::max(1.0, r.params.d()))) return false;
        // Quadrature-vs-closed per-arm residual must stay inside its physical
        // g^2 T^3 / c^2 envelope.
        const double envelope =
            100.0 * r.params.g * r.params.g * std::pow(r.params.T, 3) /
                (r.params.c * r.params.c) + 1e-25;
        if (!(r.oracle_residual <= envelope)) return false;
    }
    return true;
}

SignError sign_error_from_name(std::string_view name) {
    if (name == "proper-time") return SignError::ProperTime;
    if (name == "sliding") return SignError::Sliding;
    if (name == "golden-rule") return SignError::GoldenRule;
    throw std::invalid_argument(
        "unknown route '" + std::string(name) + "' (expected proper-time | sliding | golden-rule)");
}

std::vector<CheckItem> run_checks(SignError inject) {
    std::vector<CheckItem> items;
    const ExperimentParams p{2.2e-25, 9.8, 0.1, 1.6e7};
    const double R = p.fringe_phase();
    const QuadratureSpec q{};

    // 1. Four-situations universality, with the optional injected sign error.
    {
        double worst = 0.0;
        for (Device dev : {Device::AtomKC, Device::NeutronCOW}) {
            for (Frame fr : {Frame::Lab, Frame::FreeFall}) {
                PhaseBreakdown b = detected_phase({dev, fr}, p);
                if (inject == SignError::ProperTime) b.proper_time_phase *= -1.0;
                if (inject == SignError::Sliding) b.sliding_phase *= -1.0;
                if (inject == SignError::GoldenRule) b.golden_rule_phase *= -1.0;
                const double total = b.proper_time_phase + b.sliding_phase + b.laser_phase;
                worst = std::max(worst, std::fabs(total - (-R)));
                worst = std::max(worst, std::fabs(b.golden_rule_phase - (-R)));
            }
        }
        items.push_back({"four-situations-universality", worst, 1e-12 * R, false});
    }

    // 2. Frame invariance of delta_tau (oracle), both devices.
    {
        double worst = 0.0;
        for (Device dev : {Device::AtomKC, Device::NeutronCOW})
            worst = std::max(worst, frame_invariance_check(dev, p, q).max_discrepancy);
        const double dtau_n =
            proper_time_closed_form({Device::NeutronCOW, Frame::Lab}, p).delta_tau;
        items.push_back({"frame-invariance", worst, 1e-10 * dtau_n + 1e-28, false});
    }

    // 3. Neutron factor of two.
    {
        const NeutronPhases np = neutron_phase_consistency(p);
        const double golden = golden_rule_phase({Device::NeutronCOW, Frame::Lab}, p);
        const double worst = std::max(std::fabs(np.relative_phase - 2.0 * std::fabs(golden)),
                                      std::fabs(np.detected - std::fabs(golden)));
        items.push_back({"neutron-factor-of-two", worst, 1e-12 * R, false});
    }

    // 4. Mass independence of the atom phase.
    {
        const double masses[] = {p.m, 2.0 * p.m, 10.0 * p.m};
        items.push_back({"mass-independence", mass_independence_check(p, masses), 1e-12 * R, false});
    }

    // 5. Laser-term cancellation across 5 decades of omega.
    {
        double worst = 0.0;
        for (double scale : {1.0, 1e1, 1e2, 1e3, 1e4, 1e5}) {
            const PhaseBreakdown b =
                energy_bookkeeping_phase(p, p.kappa, 2.5e15 * scale, 6.8e9 * scale);
            worst = std::max(worst, std::fabs(b.laser_phase));
            worst = std::max(worst, b.route_agreement);
        }
        items.push_back({"laser-term-cancellation", worst, 1e-9 * R, false});
    }

    // 6. Golden-rule quadrature vs closed form.
    {
        double worst = 0.0;
        for (Device dev : {Device::AtomKC, Device::NeutronCOW}) {
            const double cf = golden_rule_phase({dev, Frame::Lab}, p);
            const double qd = golden_rule_phase_quadrature({dev, Frame::Lab}, p, q);
            worst = std::max(worst, std::fabs(qd - cf));
        }
        items.push_back({"golden-rule-quadrature", worst, 1e-11 * R, false});
    }

    // 7. Arm closure in every configuration.
    {
        double worst = 0.0;
        for (Device dev : {Device::AtomKC, Device::NeutronCOW})
            for (Frame fr : {Frame::Lab, Frame::FreeFall})
                worst = std::max(worst, closure_gap({dev, fr}, p));
        items.push_back({"arm-closure", worst, 1e-12 * 2.0 * p.d(), false});
    }

    // 8. Raman forms reduce bitwise to the plain pair at k1 = k2, omega1 = omega2.
    {
        const LaserPair lp = LaserPair::plain(1.6e7);
        const RamanPair rp{lp.k0, lp.k0, lp.omega0, lp.omega0, lp.amplitude};
        double worst = 0.0;
        for (double z : {0.0, 1.3e-7, 2.9e-6}) {
            for (double t : {0.0, 1e-9, 3e-8}) {
                worst = std::max(worst, std::abs(raman_lattice(rp, z, t).sum -
                                                 standing_wave(lp, z, t).sum));
                worst = std::max(worst, std::abs(raman_doppler(rp, 10.0, constants::c, z, t).sum -
                                                 doppler_shifted(lp, 10.0, z, t).sum));
            }
        }
        items.push_back({"raman-reduction", worst, 0.0, false});
    }

    // 9. Chirp nulling at omega_dot = 2 kappa g.
    {
        const PhaseBreakdown b =
            detected_phase({Device::AtomKC, Frame::Lab}, p, {true, 2.0 * p.kappa * p.g});
        const double worst = std::max(std::fabs(b.total), std::fabs(b.laser_phase - R));
        items.push_back({"chirp-nulling", worst, 1e-12 * R, false});
    }

    for (CheckItem& it : items) it.pass = it.value <= it.tolerance;
    return items;
}

}  // namespace mwi
