#include "mwi/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mwi {

ReportFormat report_format_from_name(std::string_view name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "table") return ReportFormat::Table;
    throw std::invalid_argument("unknown format '" + std::string(name) +
                                "' (expected json | csv | table)");
}

namespace {

std::string num(double x) {
    if (std::isnan(x)) return "null";
    if (x == 0.0 && std::signbit(x)) return "-0.0";   // bare -0 parses back as integer 0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_params(std::ostream& os, const ExperimentParams& p) {
    os << "{\"m\":" << num(p.m) << ",\"g\":" << num(p.g) << ",\"T\":" << num(p.T)
       << ",\"kappa\":" << num(p.kappa) << ",\"v_x0\":" << num(p.v_x0)
       << ",\"c\":" << num(p.c) << ",\"hbar\":" << num(p.hbar) << "}";
}

void write_result(std::ostream& os, const ConfigResult& r) {
    os << "{\"index\":" << r.index << ",\"device\":\"" << to_string(r.device)
       << "\",\"frame\":\"" << to_string(r.frame) << "\",\"params\":";
    write_params(os, r.params);
    os << ",\"phase\":{\"total\":" << num(r.phase.total)
       << ",\"proper_time_phase\":" << num(r.phase.proper_time_phase)
       << ",\"sliding_phase\":" << num(r.phase.sliding_phase)
       << ",\"laser_phase\":" << num(r.phase.laser_phase)
       << ",\"golden_rule_phase\":" << num(r.phase.golden_rule_phase)
       << ",\"route_agreement\":" << num(r.phase.route_agreement)
       << ",\"abs_fringe_phase\":" << num(r.params.fringe_phase()) << "}";
    os << ",\"propertime\":{\"tau_upper\":" << num(r.propertime.tau_upper)
       << ",\"tau_lower\":" << num(r.propertime.tau_lower)
       << ",\"delta_tau\":" << num(r.propertime.delta_tau)
       << ",\"redshift_part\":" << num(r.propertime.redshift_part)
       << ",\"velocity_part\":" << num(r.propertime.velocity_part) << "}";
    os << ",\"closure_gap\":" << num(r.closure_gap)
       << ",\"oracle_residual\":" << num(r.oracle_residual)
       << ",\"trajectory_residual\":" << num(r.trajectory_residual);
    os << ",\"trajectory\":[";
    for (std::size_t i = 0; i < r.trajectory.size(); ++i) {
        const auto& row = r.trajectory[i];
        if (i) os << ",";
        os << "[" << num(row[0]) << "," << num(row[1]) << "," << num(row[2]) << ","
           << num(row[3]) << "," << num(row[4]) << "]";
    }
    os << "]}";
}

}  // namespace

std::string emit_json(const ScenarioReport& rep) {
    std::ostringstream os;
    os << "{\"schema_version\":" << rep.schema_version << ",\"name\":\"" << rep.name
       << "\",\"tolerance\":" << num(rep.tolerance)
       << ",\"residual_scaling_exponent\":" << num(rep.residual_scaling_exponent)
       << ",\"results\":[";
    for (std::size_t i = 0; i < rep.results.size(); ++i) {
        if (i) os << ",";
        write_result(os, rep.results[i]);
    }
    os << "]}\n";
    return os.str();
}

std::string emit_csv(const ScenarioReport& rep) {
    std::ostringstream os;
    os << "# mwi trajectory csv schema_version=" << rep.schema_version << "\n";
    os << "t,y_upper,y_lower,v_upper,v_lower,frame,device\n";
    for (const ConfigResult& r : rep.results) {
        for (const auto& row : r.trajectory) {
            os << num(row[0]) << "," << num(row[1]) << "," << num(row[2]) << ","
               << num(row[3]) << "," << num(row[4]) << "," << to_string(r.frame) << ","
               << to_string(r.device) << "\n";
        }
    }
    return os.str();
}

std::string emit_table(const ScenarioReport& rep) {
    std::ostringstream os;
    os << "scenario: " << rep.name << "  (schema_version " << rep.schema_version << ")\n";
    char line[256];
    std::snprintf(line, sizeof line, "%4s %-8s %-9s %14s %14s %14s %12s\n", "idx", "device",
                  "frame", "total_phase", "|R|", "delta_tau", "route_agree");
    os << line;
    for (const ConfigResult& r : rep.results) {
        std::snprintf(line, sizeof line, "%4zu %-8s %-9s %14.6e %14.6e %14.6e %12.3e\n",
                      r.index, std::string(to_string(r.device)).c_str(),
                      std::string(to_string(r.frame)).c_str(), r.phase.total,
                      r.params.fringe_phase(), r.propertime.delta_tau,
                      r.phase.route_agreement);
        os << line;
    }
    if (!std::isnan(rep.residual_scaling_exponent)) {
        std::snprintf(line, sizeof line, "residual scaling exponent (g sweep): %.4f\n",
                      rep.residual_scaling_exponent);
        os << line;
    }
    os << (rep.within_tolerance() ? "status: OK\n" : "status: TOLERANCE EXCEEDED\n");
    return os.str();
}

std::string emit(const ScenarioReport& rep, ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::Json: return emit_json(rep);
        case ReportFormat::Csv: return emit_csv(rep);
        case ReportFormat::Table: return emit_table(rep);
    }
    throw std::logic_error("emit: bad format");
}

ScenarioReport parse_report_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("report parse error: ") + e.what());
    }
    auto as_double = [](const nlohmann::json& v) {
        return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
    };
    try {
        ScenarioReport rep;
        rep.schema_version = j.at("schema_version").get<int>();
        rep.name = j.at("name").get<std::string>();
        rep.tolerance = as_double(j.at("tolerance"));
        rep.residual_scaling_exponent = as_double(j.at("residual_scaling_exponent"));
        for (const auto& jr : j.at("results")) {
            ConfigResult r;
            r.index = jr.at("index").get<std::size_t>();
            const std::string dev = jr.at("device").get<std::string>();
            if (dev != "atom" && dev != "neutron")
                throw std::invalid_argument("bad device '" + dev + "'");
            r.device = dev == "atom" ? Device::AtomKC : Device::NeutronCOW;
            const std::string fr = jr.at("frame").get<std::string>();
            if (fr != "lab" && fr != "freefall")
                throw std::invalid_argument("bad frame '" + fr + "'");
            r.frame = fr == "lab" ? Frame::Lab : Frame::FreeFall;
            const auto& jp = jr.at("params");
            r.params = {as_double(jp.at("m")),    as_double(jp.at("g")),
                        as_double(jp.at("T")),    as_double(jp.at("kappa")),
                        as_double(jp.at("v_x0")), as_double(jp.at("c")),
                        as_double(jp.at("hbar"))};
            const auto& jph = jr.at("phase");
            r.phase.total = as_double(jph.at("total"));
            r.phase.proper_time_phase = as_double(jph.at("proper_time_phase"));
            r.phase.sliding_phase = as_double(jph.at("sliding_phase"));
            r.phase.laser_phase = as_double(jph.at("laser_phase"));
            r.phase.golden_rule_phase = as_double(jph.at("golden_rule_phase"));
            r.phase.route_agreement = as_double(jph.at("route_agreement"));
            const auto& jpt = jr.at("propertime");
            r.propertime.tau_upper = as_double(jpt.at("tau_upper"));
            r.propertime.tau_lower = as_double(jpt.at("tau_lower"));
            r.propertime.delta_tau = as_double(jpt.at("delta_tau"));
            r.propertime.redshift_part = as_double(jpt.at("redshift_part"));
            r.propertime.velocity_part = as_double(jpt.at("velocity_part"));
            r.closure_gap = as_double(jr.at("closure_gap"));
            r.oracle_residual = as_double(jr.at("oracle_residual"));
            r.trajectory_residual = as_double(jr.at("trajectory_residual"));
            for (const auto& row : jr.at("trajectory")) {
                if (row.size() != 5) throw std::invalid_argument("bad trajectory row");
                r.trajectory.push_back({as_double(row[0]), as_double(row[1]), as_double(row[2]),
                                        as_double(row[3]), as_double(row[4])});
            }
            rep.results.push_back(std::move(r));
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report parse error: ") + e.what());
    }
}

}  // namespace mwi
