#ifndef PGEOM_JSON_IO_HPP
#define PGEOM_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pgeom/projective.hpp"
#include "pgeom/quadric3.hpp"
#include "pgeom/rational.hpp"

namespace pgeom {

using nlohmann::json;

// Points serialize as arrays of exact rational strings ("3/7", "-2");
// lines as two-point arrays. Never floats: values round-trip bit-exactly.

inline json rat_vector_to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const Rat& x : v) arr.push_back(rat_str(x));
    return arr;
}

inline std::vector<Rat> rat_vector_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw bad_input("expected a nonempty coordinate array");
    std::vector<Rat> v;
    for (const auto& e : j) {
        if (!e.is_string()) throw bad_input("coordinates must be rational strings");
        v.push_back(rat_parse(e.get<std::string>()));
    }
    return v;
}

inline json point_to_json(const PPoint& p) { return rat_vector_to_json(p.coords()); }

inline PPoint point_from_json(const json& j) { return PPoint(rat_vector_from_json(j)); }

inline json line_to_json(const PLine& l) {
    return json::array({point_to_json(l.a), point_to_json(l.b)});
}

inline PLine line_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw bad_input("a line is a two-point array");
    return PLine(point_from_json(j[0]), point_from_json(j[1]));
}

inline json points_to_json(const std::vector<PPoint>& pts) {
    json arr = json::array();
    for (const PPoint& p : pts) arr.push_back(point_to_json(p));
    return arr;
}

inline std::vector<PPoint> points_from_json(const json& j) {
    if (!j.is_array()) throw bad_input("expected an array of points");
    std::vector<PPoint> pts;
    for (const auto& e : j) pts.push_back(point_from_json(e));
    return pts;
}

// Constraint union: {"point": [...]}, {"line": [[...],[...]]},
// {"curve_points": [[...], ...]}.
inline QuadricConstraint constraint_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw bad_input("constraint must be a one-key object");
    if (j.contains("point")) return QuadricConstraint::point_on(point_from_json(j["point"]));
    if (j.contains("line")) return QuadricConstraint::line_on(line_from_json(j["line"]));
    if (j.contains("curve_points"))
        return QuadricConstraint::curve_points_on(points_from_json(j["curve_points"]));
    throw bad_input("unknown constraint kind");
}

inline std::vector<QuadricConstraint> constraints_from_json(const json& j) {
    if (!j.is_array()) throw bad_input("expected an array of constraints");
    std::vector<QuadricConstraint> cs;
    for (const auto& e : j) cs.push_back(constraint_from_json(e));
    return cs;
}

}  // namespace pgeom

#endif  // PGEOM_JSON_IO_HPP
