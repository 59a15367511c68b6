#pragma once

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "splinereg/complex.hpp"

namespace splinereg {

/// Strict reader for {"vertices": [["p/q", "p/q"], ...], "triangles": [[i, j, k], ...]}.
/// Unknown keys, non-string coordinates and malformed rationals are ParseErrors.
inline SimplicialComplex parse_complex(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "top level must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "vertices" && key != "triangles") throw Error(ErrorKind::ParseError, "unknown key '" + key + "'");
  if (!doc.contains("vertices") || !doc.contains("triangles"))
    throw Error(ErrorKind::ParseError, "need both 'vertices' and 'triangles'");

  const auto& jv = doc["vertices"];
  const auto& jt = doc["triangles"];
  if (!jv.is_array() || !jt.is_array()) throw Error(ErrorKind::ParseError, "'vertices' and 'triangles' must be arrays");

  std::vector<Point2> vertices;
  for (const auto& p : jv) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw Error(ErrorKind::ParseError, "a vertex must be a pair of rational strings");
    vertices.push_back({parse_rational(p[0].get<std::string>()), parse_rational(p[1].get<std::string>())});
  }
  std::vector<Triangle> triangles;
  for (const auto& t : jt) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::ParseError, "a triangle must list three vertex indices");
    Triangle tri{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!t[i].is_number_unsigned()) throw Error(ErrorKind::ParseError, "vertex indices must be nonnegative integers");
      tri[i] = t[i].get<std::size_t>();
    }
    triangles.push_back(tri);
  }
  return SimplicialComplex(std::move(vertices), std::move(triangles));
}

inline nlohmann::json complex_to_json(const SimplicialComplex& c) {
  nlohmann::json out;
  out["vertices"] = nlohmann::json::array();
  for (const auto& p : c.vertices()) out["vertices"].push_back({to_string(p.x), to_string(p.y)});
  out["triangles"] = nlohmann::json::array();
  for (const auto& t : c.triangles()) out["triangles"].push_back({t[0], t[1], t[2]});
  return out;
}

}  // namespace splinereg
