#pragma once

// JSON views of the library's result types. Key names are stable; every
// top-level document carries "schema": "spline-reg/1".

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "splinereg/complex.hpp"
#include "splinereg/monomial.hpp"
#include "splinereg/powers_forms.hpp"
#include "splinereg/regularity.hpp"
#include "splinereg/syzygy.hpp"

namespace splinereg {

inline constexpr const char* kSchema = "spline-reg/1";

using Json = nlohmann::ordered_json;

inline Json monomials_json(const std::vector<Monomial>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

inline Json to_json(const MonomialIdeal& i) { return monomials_json(i.gens()); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const BuchGraph& g) {
  Json out;
  out["nodes"] = monomials_json(g.nodes);
  out["edges"] = Json::array();
  for (const auto& e : g.edges) out["edges"].push_back({{"i", e.i}, {"j", e.j}, {"lcm", to_string(e.lcm)}});
  out["faces"] = Json::array();
  for (const auto& f : g.faces) out["faces"].push_back({{"cycle", f.cycle}, {"lcm", to_string(f.lcm)}});
  out["euler_characteristic"] = g.euler_characteristic();
  return out;
}

inline Json to_json(const BettiTable& t) {
  Json out;
  out["ranks"] = Json::array();
  for (int i = 0; i <= t.max_index(); ++i) out["ranks"].push_back(t.total(i));
  out["multidegrees"] = Json::array();
  for (int i = 0; i <= t.max_index(); ++i) out["multidegrees"].push_back(monomials_json(t.multidegrees(i)));
  return out;
}

inline Json to_json(const Staircase& st) { return {{"r", st.r}, {"s", st.s}, {"lambda", st.lambda}}; }

inline Json to_json(const ColonStaircase& cs) { return {{"i0", cs.i0}, {"lambda_prime", cs.lambda_prime}}; }

inline Json to_json(const QData& q) {
  Json out;
  out["a"] = q.a;
  out["b"] = q.b;
  out["r"] = q.r;
  out["lambda"] = q.stair1.lambda;
  out["eta"] = q.stair2.lambda;
  out["lambda_prime"] = q.lambda_prime();
  out["eta_prime"] = q.eta_prime();
  out["i0"] = q.i0();
  out["j0"] = q.j0();
  out["l0"] = q.trivial() ? Json(nullptr) : Json(q.l0);
  out["in_q"] = to_json(q.in_q);
  out["trivial"] = q.trivial();
  return out;
}

inline Json to_json(const RegularityReport& rep) {
  Json out;
  out["a"] = rep.a;
  out["b"] = rep.b;
  out["r"] = rep.r;
  out["alpha1"] = rep.alpha1;
  out["alpha2"] = rep.alpha2;
  out["lower"] = rep.lower;
  out["upper"] = rep.upper;
  out["exact"] = optional_json(rep.exact);
  out["module_vanishes"] = !rep.exact.has_value();
  out["bottom_face"] = rep.bottom_face ? Json(to_string(*rep.bottom_face)) : Json(nullptr);
  out["zeta0"] = optional_json(rep.zeta0);
  out["socle_route"] = optional_json(rep.socle_route);
  if (rep.chain_route)
    out["chain_route"] = optional_json(*rep.chain_route);
  else
    out["chain_route"] = "not run";
  out["routes_agree"] = rep.routes_agree();
  out["conjecture_holds"] = rep.conjecture_holds;
  out["in_q"] = to_json(rep.in_q);
  return out;
}

inline Json to_json(const VertexStats& s) {
  return {{"vertex", s.vertex}, {"f1", s.f1},       {"k", s.k},       {"f1_00", s.f1_00}, {"k_00", s.k_00},
          {"f1_0b", s.f1_0b},   {"k_0b", s.k_0b}, {"alpha", optional_json(s.alpha)}};
}

inline Json to_json(const InteriorData& d, const SimplicialComplex& c) {
  auto edge_list = [&](const std::vector<std::size_t>& ids) {
    Json arr = Json::array();
    for (auto e : ids) arr.push_back({c.edges()[e][0], c.edges()[e][1]});
    return arr;
  };
  Json out;
  out["r"] = d.r;
  out["vertices"] = Json::array();
  for (const auto& s : d.vertices) out["vertices"].push_back(to_json(s));
  out["interior_edges"] = edge_list(d.interior_edges);
  out["totally_interior_edges"] = edge_list(d.totally_interior_edges);
  out["partially_interior_edges"] = edge_list(d.partially_interior_edges);
  return out;
}

inline Json to_json(const PathBounds& pb) {
  Json out;
  out["r"] = pb.r;
  out["edges"] = Json::array();
  for (const auto& e : pb.edges)
    out["edges"].push_back({{"vi", e.vi}, {"vj", e.vj}, {"lower", e.lower}, {"upper", e.upper}});
  out["lower"] = optional_json(pb.lower);
  out["upper"] = optional_json(pb.upper);
  if (pb.oracle)
    out["oracle"] = optional_json(*pb.oracle);
  else
    out["oracle"] = "not run";
  out["within"] = optional_json(pb.within);
  out["module_vanishes"] = pb.module_vanishes;
  return out;
}

inline Json error_json(const Error& e) {
  return {{"schema", kSchema}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
}

}  // namespace splinereg
