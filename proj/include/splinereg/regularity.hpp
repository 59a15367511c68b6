#pragma once

// Regularity of H0(J.) for complexes with one totally interior edge, the
// alpha-sandwich bounds, the reg <= 2r check, and the bounds over totally
// interior edges for general complexes.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "splinereg/complex.hpp"
#include "splinereg/error.hpp"
#include "splinereg/monomial.hpp"
#include "splinereg/powers_forms.hpp"
#include "splinereg/syzygy.hpp"

namespace splinereg {

struct RegularityReport {
  int a = 0;
  int b = 0;
  int r = 0;
  int alpha1 = 0;  // floor((r+1)/(a-1))
  int alpha2 = 0;  // floor((r+1)/(b-1))
  int lower = 0;   // alpha1 + alpha2 + r - 1
  int upper = 0;   // alpha1 + alpha2 + r
  std::optional<int> exact;  // nullopt: H0 vanishes
  std::optional<Monomial> bottom_face;
  std::optional<int> zeta0;
  std::optional<int> socle_route;  // socle degree of S / In Q, plus r + 1
  std::optional<std::optional<int>> chain_route;  // set when the chain-complex oracle ran
  bool conjecture_holds = true;  // exact <= 2r (vacuous when H0 = 0)
  MonomialIdeal in_q;

  bool routes_agree() const {
    if (!exact) return !chain_route || !chain_route->has_value();
    if (socle_route != exact) return false;
    return !chain_route || *chain_route == exact;
  }
};

/// Exact regularity through In Q, its Buchberger graph and the bottom face,
/// with the socle degree as a second route. (a, b) are sorted first.
inline RegularityReport regularity_one_edge(int a, int b, int r) {
  if (a < 3 || b < 3)
    throw Error(ErrorKind::InvalidSlopeCount,
                "a and b must be >= 3, got (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "r must be >= 0");
  if (a > b) std::swap(a, b);

  RegularityReport rep;
  rep.a = a;
  rep.b = b;
  rep.r = r;
  rep.alpha1 = (r + 1) / (a - 1);
  rep.alpha2 = (r + 1) / (b - 1);
  rep.lower = rep.alpha1 + rep.alpha2 + r - 1;
  rep.upper = rep.alpha1 + rep.alpha2 + r;

  const QData q = build_q(a, b, r);
  rep.in_q = q.in_q;
  if (q.i0() != rep.alpha1 || q.j0() != rep.alpha2)
    throw Error(ErrorKind::RouteDisagreement, "staircase corner differs from floor((r+1)/(k-1))");
  if (q.trivial()) return rep;

  const BuchGraph graph = buchberger_graph(q.in_q);
  const auto faces = syz3_closed_form(graph);
  const Monomial h0 = bottom_face(q);
  if (faces.empty() || !(faces.front() == h0))
    throw Error(ErrorKind::RouteDisagreement, "lowest face of the Buchberger graph is not " + to_string(h0));
  const int reg = regularity_from_bottom_face(q);
  rep.exact = reg;
  rep.bottom_face = h0;
  rep.zeta0 = h0.ez;
  rep.socle_route = max_socle_degree(q.in_q) + r + 1;
  if (reg < rep.lower || reg > rep.upper)
    throw Error(ErrorKind::RouteDisagreement, "regularity " + std::to_string(reg) + " outside [" +
                                                  std::to_string(rep.lower) + ", " + std::to_string(rep.upper) + "]");
  rep.conjecture_holds = reg <= 2 * r;
  return rep;
}

/// End to end from coordinates: normalizes, runs the closed form for the
/// derived (a, b), and insists the chain-complex oracle agrees.
inline RegularityReport regularity_from_complex(const SimplicialComplex& c, int r) {
  const OneEdgeNormalization norm = normalize_one_edge(c, r);
  const InteriorData data = interior_stats(c, r);
  for (auto v : {norm.v1, norm.v2}) {
    const auto& s = data.at(v);
    if (s.k != s.k_0b + 1)
      throw Error(ErrorKind::SlopeClashAssumption, "k(v) != k_0b(v) + 1 at vertex " + std::to_string(v));
  }
  if (static_cast<int>(norm.slopes1.size()) != norm.a - 1 || static_cast<int>(norm.slopes2.size()) != norm.b - 1)
    throw Error(ErrorKind::RouteDisagreement, "normalized slope counts differ from k(v) - 1");

  RegularityReport rep = regularity_one_edge(norm.a, norm.b, r);
  if (rep.alpha1 != data.alpha(norm.v1) || rep.alpha2 != data.alpha(norm.v2))
    throw Error(ErrorKind::RouteDisagreement, "alpha from k_0b differs from floor((r+1)/(k-1))");
  rep.chain_route = h0_regularity_oracle(c, r);
  if (*rep.chain_route != rep.exact)
    throw Error(ErrorKind::RouteDisagreement,
                "chain-complex oracle gives " +
                    (rep.chain_route->has_value() ? std::to_string(**rep.chain_route) : std::string("zero module")) +
                    ", closed form gives " + (rep.exact ? std::to_string(*rep.exact) : std::string("zero module")));
  return rep;
}

/// reg <= 2r, plus the inequality floor((r+1)/2) + floor((r+1)/3) + r <= 2r
/// that settles every (a, b) != (3, 3).
inline bool check_2r_theorem(const RegularityReport& rep) {
  if (!rep.exact) throw Error(ErrorKind::TrivialIdeal, "regularity undefined: H0 vanishes");
  bool ok = *rep.exact <= 2 * rep.r;
  if (!(rep.a == 3 && rep.b == 3)) ok = ok && (rep.r + 1) / 2 + (rep.r + 1) / 3 + rep.r <= 2 * rep.r;
  return ok;
}

struct EdgeBound {
  std::size_t vi = 0;
  std::size_t vj = 0;
  int lower = 0;  // floor((r+1)/(k(vi)-1)) + floor((r+1)/(k(vj)-1)) + r - 1
  int upper = 0;  // alpha(vi) + alpha(vj) + r
};

struct PathBounds {
  int r = 0;
  std::vector<EdgeBound> edges;
  std::optional<int> lower;  // max over edges; nullopt when there are none
  std::optional<int> upper;
  std::optional<std::optional<int>> oracle;  // set when the chain-complex oracle ran
  std::optional<bool> within;  // unset when the oracle did not run or H0 vanishes
  bool module_vanishes = false;  // oracle found H0 = 0; bounds reported, not asserted
};

inline PathBounds path_bounds(const SimplicialComplex& c, int r, bool run_oracle) {
  const InteriorData data = interior_stats(c, r);
  for (const auto& s : data.vertices)
    if (s.f1_0b == 0)
      throw Error(ErrorKind::HypothesisViolated,
                  "interior vertex " + std::to_string(s.vertex) + " has no partially interior edge");
  PathBounds out;
  out.r = r;
  for (auto e : data.totally_interior_edges) {
    const auto& key = c.edges()[e];
    const auto& si = data.at(key[0]);
    const auto& sj = data.at(key[1]);
    if (si.k < 2 || sj.k < 2) throw Error(ErrorKind::InvalidSlopeCount, "interior vertex with fewer than two slopes");
    EdgeBound eb;
    eb.vi = key[0];
    eb.vj = key[1];
    eb.lower = (r + 1) / (si.k - 1) + (r + 1) / (sj.k - 1) + r - 1;
    eb.upper = data.alpha(key[0]) + data.alpha(key[1]) + r;
    out.lower = std::max(out.lower.value_or(eb.lower), eb.lower);
    out.upper = std::max(out.upper.value_or(eb.upper), eb.upper);
    out.edges.push_back(eb);
  }
  if (run_oracle) {
    out.oracle = h0_regularity_oracle(c, r);
    out.module_vanishes = !out.oracle->has_value();
    if (!out.module_vanishes)
      out.within = out.lower && out.upper && **out.oracle >= *out.lower && **out.oracle <= *out.upper;
  }
  return out;
}

}  // namespace splinereg
