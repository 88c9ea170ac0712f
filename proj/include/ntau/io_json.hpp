#pragma once

#include <string>

#include <json.hpp>

#include "ntau/appendix.hpp"
#include "ntau/geometry.hpp"
#include "ntau/newton_sps.hpp"
#include "ntau/poly.hpp"

namespace ntau {

// Coordinates travel as decimal strings so arbitrary-precision values
// survive every JSON implementation untouched.

nlohmann::json point_set_to_json(const PointSet& s);
PointSet point_set_from_json(const nlohmann::json& j);

nlohmann::json polygon_to_json(const ConvexPolygon& p);
ConvexPolygon polygon_from_json(const nlohmann::json& j);

/// Accepts either a bare point array or a {"vertices": [...]} polygon
/// object and returns the points.
PointSet points_from_json_flexible(const nlohmann::json& j);

/// Flat object with decimal-string numerics, one report per JSONL line in
/// batch mode.
nlohmann::json edge_report_to_json(const EdgeReport& r);

/// {"rows": [["poly", ...], ...]} with polynomials in the text grammar.
nlohmann::json sps_to_json(const SpsExpression& e);
SpsExpression sps_from_json(const nlohmann::json& j);

nlohmann::json sameprop_report_to_json(const SamePropReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace ntau
