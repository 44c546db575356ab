#pragma once

#include <string>

#include <json.hpp>

#include "enact/engine.hpp"

namespace enact {

/// Machine-readable report. Arrays are sorted by id and numbers are
/// emitted at full precision, so identical inputs serialize to identical
/// bytes.
nlohmann::json machine_report(const AssessmentResult& result);

/// Human-readable report; `digits` controls displayed decimal places only.
std::string render_text_report(const AssessmentResult& result, int digits);

/// Per-equation trace for one (service, activity) cell: resolved effect,
/// joint composition, share and the allocation split.
nlohmann::json equation_trace(const Portfolio& portfolio, const AssessmentResult& result,
                              const std::string& service_id, const std::string& activity_id);

}  // namespace enact
