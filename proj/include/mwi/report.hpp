#pragma once

#include <string>
#include <string_view>

#include "mwi/scenario.hpp"

namespace mwi {

enum class ReportFormat { Json, Csv, Table };
ReportFormat report_format_from_name(std::string_view name);

// Canonical JSON: fixed key order, numbers with 17 significant digits, so
// identical reports serialize byte-identically.
std::string emit_json(const ScenarioReport& rep);

// One row per (configuration, time-sample): t, y_upper, y_lower, v_upper,
// v_lower, frame, device.
std::string emit_csv(const ScenarioReport& rep);

std::string emit_table(const ScenarioReport& rep);

std::string emit(const ScenarioReport& rep, ReportFormat fmt);

// Inverse of emit_json; throws std::invalid_argument on malformed input.
ScenarioReport parse_report_json(std::string_view text);

}  // namespace mwi
