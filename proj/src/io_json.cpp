#include "ntau/io_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ntau {

using nlohmann::json;

namespace {

mpz_class mpz_from_json(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(j.get<long long>());
    throw std::invalid_argument("expected an integer or decimal string");
}

json point_to_json(const LatticePoint& p) {
    return json::array({p.x.get_str(), p.y.get_str()});
}

LatticePoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("point must be a [x, y] pair");
    return {mpz_from_json(j[0]), mpz_from_json(j[1])};
}

std::string double_to_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

json point_set_to_json(const PointSet& s) {
    json arr = json::array();
    for (const auto& p : s) arr.push_back(point_to_json(p));
    return arr;
}

PointSet point_set_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("point set must be a JSON array");
    std::vector<LatticePoint> pts;
    pts.reserve(j.size());
    for (const auto& item : j) pts.push_back(point_from_json(item));
    return PointSet(std::move(pts));
}

json polygon_to_json(const ConvexPolygon& p) {
    json arr = json::array();
    for (const auto& v : p.vertices()) arr.push_back(point_to_json(v));
    return json{{"vertices", arr}};
}

ConvexPolygon polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw std::invalid_argument("polygon must be {\"vertices\": [...]}");
    std::vector<LatticePoint> verts;
    for (const auto& item : j["vertices"]) verts.push_back(point_from_json(item));
    return ConvexPolygon::from_vertices(std::move(verts));
}

PointSet points_from_json_flexible(const json& j) {
    if (j.is_object() && j.contains("vertices"))
        return PointSet(polygon_from_json(j).vertices());
    return point_set_from_json(j);
}

json edge_report_to_json(const EdgeReport& r) {
    return json{{"k", std::to_string(r.k)},
                {"m", std::to_string(r.m)},
                {"t", std::to_string(r.t)},
                {"expanded_terms", std::to_string(r.expanded_terms)},
                {"edges", std::to_string(r.edges)},
                {"envelope_edges", std::to_string(r.envelope_edges)},
                {"bound_no_cancel", r.bound_no_cancel.get_str()},
                {"bound_2polys", double_to_string(r.bound_2polys)},
                {"bound_mpolys", double_to_string(r.bound_mpolys)},
                {"bound_weak", double_to_string(r.bound_weak)},
                {"c", r.c.get_str()},
                {"containment_ok", r.containment_ok}};
}

json sps_to_json(const SpsExpression& e) {
    json rows = json::array();
    for (const auto& row : e.rows()) {
        json r = json::array();
        for (const auto& f : row) r.push_back(to_string(f));
        rows.push_back(std::move(r));
    }
    return json{{"rows", rows}};
}

SpsExpression sps_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows"))
        throw std::invalid_argument("expression must be {\"rows\": [[...], ...]}");
    std::vector<std::vector<SparsePoly>> rows;
    for (const auto& row : j["rows"]) {
        std::vector<SparsePoly> factors;
        for (const auto& f : row) factors.push_back(parse_poly(f.get<std::string>()));
        rows.push_back(std::move(factors));
    }
    return SpsExpression(std::move(rows));
}

json sameprop_report_to_json(const SamePropReport& r) {
    const char* case_name = r.which_case == SamePropCase::NoOrigin ? "no_origin"
                            : r.which_case == SamePropCase::ConstantSurvives
                                ? "constant_survives"
                                : "constant_cancels";
    json out{{"case", case_name},
             {"condition_ii", r.condition_ii},
             {"match", r.match},
             {"jk_overlap", std::to_string(r.jk_overlap)},
             {"newton", polygon_to_json(r.actual)},
             {"predicted", polygon_to_json(r.predicted)}};
    if (r.offending_vertex)
        out["offending_vertex"] = point_to_json(*r.offending_vertex);
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace ntau
