#pragma once

#include <string>

#include <json.hpp>

#include "ferrers/diagnostics.hpp"
#include "ferrers/explore.hpp"
#include "ferrers/poly.hpp"
#include "ferrers/verdict.hpp"

namespace ferrers {

/// {"coeffs": ["1","1","2"]} — decimal strings, never native numbers.
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

nlohmann::json diagnostics_to_json(const SeqDiagnostics& d);
SeqDiagnostics diagnostics_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const ClaimVerdict& v);

nlohmann::json report_to_json(const ScanReport& r);
ScanReport report_from_json(const nlohmann::json& j);

std::string report_to_json_string(const ScanReport& r);
ScanReport report_from_json_string(const std::string& text);

}  // namespace ferrers
