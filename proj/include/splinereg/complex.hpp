#pragma once

// Planar simplicial complexes and the ideal complex
//
//   J.: 0 -> (+)_{tau interior edge} J(tau) -> (+)_{v interior vertex} J(v) -> 0,
//   J(tau) = <l_tau^{r+1}>,  J(v) = sum_{tau ∋ v} J(tau),
//
// with brute-force oracles for dim H0(J.)_d and for dim C^r_d.
//
// Conventions: triangles are stored counterclockwise; an edge {u, w} with
// u < w is oriented u -> w, so its boundary is w - u (boundary vertices
// dropped). Vertices are points of the plane z = 1 when homogenized.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "splinereg/error.hpp"
#include "splinereg/linalg.hpp"
#include "splinereg/monomial.hpp"
#include "splinereg/rational.hpp"

namespace splinereg {

struct Point2 {
  Rational x;
  Rational y;
  bool operator==(const Point2&) const = default;
};

using Triangle = std::array<std::size_t, 3>;
using EdgeKey = std::array<std::size_t, 2>;  // sorted endpoints

/// A homogeneous linear form A x + B y + C z with coprime integer
/// coefficients, first nonzero coefficient positive.
struct LinearForm {
  Integer a = 0;
  Integer b = 0;
  Integer c = 0;

  static LinearForm canonical(const Rational& a, const Rational& b, const Rational& c) {
    std::array<Rational, 3> q{a, b, c};
    auto v = to_integer_vector(q);
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, "zero linear form");
    LinearForm f;
    for (const auto& [i, n] : v) (i == 0 ? f.a : i == 1 ? f.b : f.c) = n;
    return f;
  }

  /// The line through two distinct points of the plane z = 1.
  static LinearForm through(const Point2& p, const Point2& q) {
    return canonical(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
  }

  Rational eval(const Point2& p) const { return Rational(a) * p.x + Rational(b) * p.y + Rational(c); }

  bool operator==(const LinearForm&) const = default;
};

inline std::string to_string(const LinearForm& f) {
  return "[" + f.a.get_str() + ", " + f.b.get_str() + ", " + f.c.get_str() + "]";
}

class SimplicialComplex {
 public:
  /// Validates and orients. Throws ParseError, DegenerateTriangle,
  /// NotConnected or NonzeroGenus naming the violated invariant.
  SimplicialComplex(std::vector<Point2> vertices, std::vector<Triangle> triangles)
      : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
    validate();
  }

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<EdgeKey>& edges() const { return edges_; }

  /// Triangles containing edge e (one or two).
  const std::vector<std::size_t>& edge_triangles(std::size_t e) const { return edge_tris_[e]; }
  bool edge_is_boundary(std::size_t e) const { return edge_tris_[e].size() == 1; }
  bool vertex_is_interior(std::size_t v) const { return interior_[v]; }

  std::vector<std::size_t> interior_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (interior_[v]) out.push_back(v);
    return out;
  }

  std::vector<std::size_t> interior_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (!edge_is_boundary(e)) out.push_back(e);
    return out;
  }

  LinearForm edge_form(std::size_t e) const {
    return LinearForm::through(vertices_[edges_[e][0]], vertices_[edges_[e][1]]);
  }

  long long euler_characteristic() const {
    return static_cast<long long>(vertices_.size()) - static_cast<long long>(edges_.size()) +
           static_cast<long long>(triangles_.size());
  }

 private:
  static Rational orient(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  }

  void validate() {
    const std::size_t nv = vertices_.size();
    if (triangles_.empty()) throw Error(ErrorKind::ParseError, "complex has no triangles");
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i + 1; j < nv; ++j)
        if (vertices_[i] == vertices_[j])
          throw Error(ErrorKind::ParseError, "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    std::set<Triangle> seen;
    std::vector<bool> used(nv, false);
    for (auto& t : triangles_) {
      for (auto v : t)
        if (v >= nv) throw Error(ErrorKind::ParseError, "triangle references vertex " + std::to_string(v));
      if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        throw Error(ErrorKind::DegenerateTriangle, "triangle repeats a vertex");
      Rational o = orient(vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]);
      if (o == 0) throw Error(ErrorKind::DegenerateTriangle, "collinear triangle");
      if (o < 0) std::swap(t[1], t[2]);
      Triangle key = t;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) throw Error(ErrorKind::ParseError, "triangle listed twice");
      for (auto v : t) used[v] = true;
    }
    for (std::size_t v = 0; v < nv; ++v)
      if (!used[v]) throw Error(ErrorKind::ParseError, "vertex " + std::to_string(v) + " is in no triangle");

    std::map<EdgeKey, std::vector<std::size_t>> edge_map;
    for (std::size_t t = 0; t < triangles_.size(); ++t)
      for (int s = 0; s < 3; ++s) {
        EdgeKey k{triangles_[t][s], triangles_[t][(s + 1) % 3]};
        if (k[0] > k[1]) std::swap(k[0], k[1]);
        edge_map[k].push_back(t);
      }
    for (auto& [k, tris] : edge_map) {
      if (tris.size() > 2) throw Error(ErrorKind::ParseError, "an edge lies in more than two triangles");
      if (tris.size() == 2) {
        // The two triangles must sit on opposite sides of their shared edge.
        auto apex = [&](std::size_t t) {
          for (auto v : triangles_[t])
            if (v != k[0] && v != k[1]) return v;
          return k[0];
        };
        Rational s1 = orient(vertices_[k[0]], vertices_[k[1]], vertices_[apex(tris[0])]);
        Rational s2 = orient(vertices_[k[0]], vertices_[k[1]], vertices_[apex(tris[1])]);
        if (sgn(s1) == sgn(s2)) throw Error(ErrorKind::ParseError, "triangles fold over a shared edge");
      }
      edges_.push_back(k);
      edge_tris_.push_back(tris);
    }

    // Connectivity of the 1-skeleton.
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& e : edges_) parent[find(e[0])] = find(e[1]);
    for (std::size_t v = 1; v < nv; ++v)
      if (find(v) != find(0)) throw Error(ErrorKind::NotConnected, "complex is not connected");

    if (euler_characteristic() != 1)
      throw Error(ErrorKind::NonzeroGenus, "V - E + F = " + std::to_string(euler_characteristic()) + ", expected 1");

    interior_.assign(nv, true);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (edge_is_boundary(e)) interior_[edges_[e][0]] = interior_[edges_[e][1]] = false;
  }

  std::vector<Point2> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<EdgeKey> edges_;
  std::vector<std::vector<std::size_t>> edge_tris_;
  std::vector<bool> interior_;
};

// ---------------------------------------------------------------------------
// Interior statistics

struct VertexStats {
  std::size_t vertex = 0;
  int f1 = 0;     // incident edges
  int k = 0;      // distinct slopes among them
  int f1_00 = 0;  // totally interior incident edges
  int k_00 = 0;
  int f1_0b = 0;  // partially interior incident edges
  int k_0b = 0;
  std::optional<int> alpha;  // floor((r + 1) / k_0b) when k_0b > 0
};

struct InteriorData {
  int r = 0;
  std::vector<VertexStats> vertices;  // interior vertices, ascending index
  std::vector<std::size_t> interior_edges;
  std::vector<std::size_t> totally_interior_edges;
  std::vector<std::size_t> partially_interior_edges;

  const VertexStats& at(std::size_t v) const {
    for (const auto& s : vertices)
      if (s.vertex == v) return s;
    throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " is not interior");
  }

  int alpha(std::size_t v) const {
    const auto& s = at(v);
    if (!s.alpha) throw Error(ErrorKind::AlphaUndefined, "k_0b(v" + std::to_string(v) + ") = 0");
    return *s.alpha;
  }
};

/// Throws SlopeClashAssumption if, at some interior vertex, a partially
/// interior edge shares a slope with a totally interior edge.
inline InteriorData interior_stats(const SimplicialComplex& c, int r) {
  InteriorData out;
  out.r = r;
  const auto& E = c.edges();
  for (std::size_t e = 0; e < E.size(); ++e) {
    if (c.edge_is_boundary(e)) continue;
    out.interior_edges.push_back(e);
    const bool i0 = c.vertex_is_interior(E[e][0]), i1 = c.vertex_is_interior(E[e][1]);
    if (i0 && i1) out.totally_interior_edges.push_back(e);
    else if (i0 || i1) out.partially_interior_edges.push_back(e);
  }
  for (auto v : c.interior_vertices()) {
    VertexStats s;
    s.vertex = v;
    // Edges through v share a slope iff they lie on the same line, i.e.
    // have the same homogeneous form.
    std::set<std::array<Integer, 3>> all, tot, part;
    for (std::size_t e = 0; e < E.size(); ++e) {
      if (E[e][0] != v && E[e][1] != v) continue;
      const std::size_t w = E[e][0] == v ? E[e][1] : E[e][0];
      LinearForm f = c.edge_form(e);
      std::array<Integer, 3> key{f.a, f.b, f.c};
      ++s.f1;
      all.insert(key);
      if (c.vertex_is_interior(w)) {
        ++s.f1_00;
        tot.insert(key);
      } else {
        ++s.f1_0b;
        part.insert(key);
      }
    }
    s.k = static_cast<int>(all.size());
    s.k_00 = static_cast<int>(tot.size());
    s.k_0b = static_cast<int>(part.size());
    for (const auto& key : part)
      if (tot.count(key))
        throw Error(ErrorKind::SlopeClashAssumption,
                    "vertex " + std::to_string(v) + " has a partially and a totally interior edge on one line");
    if (s.k_0b > 0) s.alpha = (r + 1) / s.k_0b;
    out.vertices.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// One-edge normalization

struct OneEdgeNormalization {
  std::size_t v1 = 0;
  std::size_t v2 = 0;
  int a = 0;  // k(v1) <= k(v2) = b
  int b = 0;
  RatMatrix transform;                // p' = transform * p on homogeneous points
  std::vector<Rational> slopes1;      // forms x + c z at v1, ascending, contains 0
  std::vector<Rational> slopes2;      // forms y + c z at v2, ascending, contains 0
  LinearForm epsilon_image;           // always z
};

namespace detail {

inline RatMatrix inverse3(const RatMatrix& m) {
  auto at = [&](int i, int j) -> const Rational& { return m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
  Rational det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                 at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                 at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  if (det == 0) throw Error(ErrorKind::InvalidArgument, "singular coordinate change");
  RatMatrix inv(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) / det;
    }
  return inv;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

// Row vector form times matrix.
inline std::array<Rational, 3> pull_back(const LinearForm& f, const RatMatrix& m) {
  std::array<Rational, 3> l{Rational(f.a), Rational(f.b), Rational(f.c)};
  std::array<Rational, 3> out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = l[0] * m(0, j) + l[1] * m(1, j) + l[2] * m(2, j);
  return out;
}

inline std::vector<LinearForm> forms_at(const SimplicialComplex& c, std::size_t v, std::optional<std::size_t> skip_edge) {
  std::vector<LinearForm> out;
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    if (skip_edge && *skip_edge == e) continue;
    const auto& k = c.edges()[e];
    if (k[0] != v && k[1] != v) continue;
    LinearForm f = c.edge_form(e);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

}  // namespace detail

/// Projective change of coordinates sending v1 -> [0,1,0], v2 -> [1,0,0] and
/// the edge between them to {z = 0}, followed by shears making the smallest
/// slope at each end zero.
inline OneEdgeNormalization normalize_one_edge(const SimplicialComplex& c, int r) {
  const InteriorData data = interior_stats(c, r);
  if (data.totally_interior_edges.size() != 1)
    throw Error(ErrorKind::NotOneEdge,
                "found " + std::to_string(data.totally_interior_edges.size()) + " totally interior edges");
  const std::size_t eps = data.totally_interior_edges.front();
  std::size_t v1 = c.edges()[eps][0], v2 = c.edges()[eps][1];
  if (data.vertices.size() != 2)
    throw Error(ErrorKind::ExtraInteriorVertex,
                std::to_string(data.vertices.size()) + " interior vertices; only the ends of the edge may be interior");
  if (data.at(v1).k > data.at(v2).k) std::swap(v1, v2);

  OneEdgeNormalization out;
  out.v1 = v1;
  out.v2 = v2;
  out.a = data.at(v1).k;
  out.b = data.at(v2).k;

  const Point2& p1 = c.vertices()[v1];
  const Point2& p2 = c.vertices()[v2];
  // inverse transform has columns p2, p1, w with w off the line p1 p2.
  const LinearForm eps_form = c.edge_form(eps);
  std::array<Rational, 3> w{0, 0, 1};
  for (const auto& cand : {std::array<Rational, 3>{0, 0, 1}, std::array<Rational, 3>{1, 0, 0},
                           std::array<Rational, 3>{0, 1, 0}}) {
    if (Rational(eps_form.a) * cand[0] + Rational(eps_form.b) * cand[1] + Rational(eps_form.c) * cand[2] != 0) {
      w = cand;
      break;
    }
  }
  RatMatrix inv(3, 3);
  const std::array<Rational, 3> h2{p2.x, p2.y, 1}, h1{p1.x, p1.y, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    inv(i, 0) = h2[i];
    inv(i, 1) = h1[i];
    inv(i, 2) = w[i];
  }

  auto slopes_for = [&](std::size_t v, std::size_t lead_coord, const RatMatrix& m) {
    std::vector<Rational> out_slopes;
    for (const auto& f : detail::forms_at(c, v, eps)) {
      auto l = detail::pull_back(f, m);
      if (l[lead_coord] == 0) throw Error(ErrorKind::SlopeClashAssumption, "edge form coincides with the shared edge");
      out_slopes.push_back(l[2] / l[lead_coord]);
    }
    std::sort(out_slopes.begin(), out_slopes.end());
    return out_slopes;
  };

  // Forms at v1 become A x + C z, forms at v2 become B y + C z.
  auto s1 = slopes_for(v1, 0, inv);
  auto s2 = slopes_for(v2, 1, inv);
  RatMatrix shear = RatMatrix::identity(3);
  shear(0, 2) = s1.front();
  shear(1, 2) = s2.front();
  out.transform = detail::multiply(shear, detail::inverse3(inv));
  const RatMatrix full_inv = detail::inverse3(out.transform);
  out.slopes1 = slopes_for(v1, 0, full_inv);
  out.slopes2 = slopes_for(v2, 1, full_inv);

  auto e = detail::pull_back(eps_form, full_inv);
  out.epsilon_image = LinearForm::canonical(e[0], e[1], e[2]);
  if (!(out.epsilon_image == LinearForm{0, 0, 1}))
    throw Error(ErrorKind::RouteDisagreement, "shared edge did not map to z = 0");
  if (out.slopes1.front() != 0 || out.slopes2.front() != 0)
    throw Error(ErrorKind::RouteDisagreement, "normalized slopes do not contain 0");
  return out;
}

// ---------------------------------------------------------------------------
// Ideal complex and the H0 oracle

struct IdealComplexEdge {
  std::size_t edge = 0;
  LinearForm form;
  std::optional<std::size_t> plus_block;   // block index of the head w, if interior
  std::optional<std::size_t> minus_block;  // block index of the tail u, if interior
};

struct IdealComplexVertex {
  std::size_t vertex = 0;
  std::vector<LinearForm> forms;  // distinct edge forms through the vertex
};

struct IdealComplex {
  int r = 0;
  std::vector<IdealComplexEdge> edges;      // columns: interior edges
  std::vector<IdealComplexVertex> blocks;   // rows: interior vertices
};

inline IdealComplex ideal_complex(const SimplicialComplex& c, int r) {
  IdealComplex out;
  out.r = r;
  std::map<std::size_t, std::size_t> block_of;
  for (auto v : c.interior_vertices()) {
    block_of[v] = out.blocks.size();
    out.blocks.push_back({v, detail::forms_at(c, v, std::nullopt)});
  }
  for (auto e : c.interior_edges()) {
    IdealComplexEdge col;
    col.edge = e;
    col.form = c.edge_form(e);
    const auto& k = c.edges()[e];
    if (auto it = block_of.find(k[1]); it != block_of.end()) col.plus_block = it->second;
    if (auto it = block_of.find(k[0]); it != block_of.end()) col.minus_block = it->second;
    out.edges.push_back(col);
  }
  return out;
}

namespace detail {

// Terms of (a x + b y + c z)^n.
inline std::vector<std::pair<Monomial, Integer>> form_power(const LinearForm& f, int n) {
  std::vector<std::pair<Monomial, Integer>> out;
  for (const auto& m : monomials_of_degree(n)) {
    Integer coef = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m.ex)) *
                   binomial(static_cast<unsigned long>(n - m.ex), static_cast<unsigned long>(m.ey));
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), f.a.get_mpz_t(), static_cast<unsigned long>(m.ex));
    coef *= p;
    mpz_pow_ui(p.get_mpz_t(), f.b.get_mpz_t(), static_cast<unsigned long>(m.ey));
    coef *= p;
    mpz_pow_ui(p.get_mpz_t(), f.c.get_mpz_t(), static_cast<unsigned long>(m.ez));
    coef *= p;
    if (coef != 0) out.emplace_back(m, coef);
  }
  return out;
}

inline SparseVec shifted(const std::vector<std::pair<Monomial, Integer>>& terms, const Monomial& mu,
                         std::size_t offset, int sign) {
  SparseVec v;
  for (const auto& [m, coef] : terms) v.emplace_back(offset + lex_index(m * mu), sign > 0 ? coef : Integer(-coef));
  std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return v;
}

}  // namespace detail

/// dim_k J(v)_d for the ideal generated by the (r+1)-st powers of `forms`.
inline long long power_ideal_dimension(const std::vector<LinearForm>& forms, int r, int d) {
  if (d < r + 1) return 0;
  IntegerEchelon ech(static_cast<std::size_t>(monomial_count(d)));
  const auto mus = monomials_of_degree(d - r - 1);
  for (const auto& f : forms) {
    auto terms = detail::form_power(f, r + 1);
    for (const auto& mu : mus) {
      if (ech.full()) break;
      ech.insert(detail::shifted(terms, mu, 0, 1));
    }
  }
  return static_cast<long long>(ech.rank());
}

/// dim H0(J.)_d = sum_v dim J(v)_d - rank(boundary map in degree d).
inline long long h0_hilbert_oracle(const SimplicialComplex& c, int r, int d) {
  if (d < r + 1) return 0;
  const IdealComplex jc = ideal_complex(c, r);
  if (jc.blocks.empty()) return 0;
  long long target = 0;
  for (const auto& b : jc.blocks) target += power_ideal_dimension(b.forms, r, d);
  const std::size_t block = static_cast<std::size_t>(monomial_count(d));
  IntegerEchelon ech(block * jc.blocks.size());
  const auto mus = monomials_of_degree(d - r - 1);
  for (const auto& e : jc.edges) {
    if (!e.plus_block && !e.minus_block) continue;
    auto terms = detail::form_power(e.form, r + 1);
    for (const auto& mu : mus) {
      SparseVec col;
      if (e.minus_block) col = detail::shifted(terms, mu, *e.minus_block * block, -1);
      if (e.plus_block) {
        auto plus = detail::shifted(terms, mu, *e.plus_block * block, 1);
        col.insert(col.end(), plus.begin(), plus.end());
        std::sort(col.begin(), col.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      }
      ech.insert(std::move(col));
    }
  }
  return target - static_cast<long long>(ech.rank());
}

/// Largest d with H0(J.)_d != 0, or nullopt when H0 vanishes. H0 is a
/// quotient of modules generated in degree r + 1, so it vanishes from the
/// first zero degree on; `full_scan` ignores that and evaluates every degree
/// up to the cap 4r + 2.
inline std::optional<int> h0_regularity_oracle(const SimplicialComplex& c, int r, bool full_scan = false) {
  const int cap = 4 * r + 2;
  std::optional<int> last;
  for (int d = r + 1; d <= cap; ++d) {
    if (h0_hilbert_oracle(c, r, d) != 0) {
      if (d == cap) throw Error(ErrorKind::CapExceeded, "H0 nonzero in degree 4r + 2 = " + std::to_string(cap));
      last = d;
    } else if (!full_scan) {
      break;
    }
  }
  return last;
}

// ---------------------------------------------------------------------------
// Local data and spline dimensions

struct LocalResolution {
  int k = 0;
  int r = 0;
  int alpha_star = 0;
  int a1 = 0;
  int a2 = 0;

  /// HF(S / J(v), d) from the free resolution
  /// S(-r-1-alpha)^{a1} (+) S(-r-2-alpha)^{a2} -> S(-r-1)^k -> S.
  long long hilbert(int d) const {
    return choose2(d + 2) - k * choose2(d - r + 1) + a1 * choose2(d - r - alpha_star + 1) +
           a2 * choose2(d - r - alpha_star);
  }
};

inline LocalResolution schumaker_local(int k, int r) {
  if (k < 2) throw Error(ErrorKind::InvalidSlopeCount, "a vertex needs at least two slopes, got " + std::to_string(k));
  LocalResolution lr;
  lr.k = k;
  lr.r = r;
  lr.alpha_star = (r + 1) / (k - 1);
  lr.a1 = (k - 1) * lr.alpha_star + k - r - 2;
  lr.a2 = r + 1 - (k - 1) * lr.alpha_star;
  return lr;
}

/// dim C^r_d from local data and dim H0(J.)_d (Euler characteristic of S./J.).
inline long long spline_dim_formula(const SimplicialComplex& c, int r, int d) {
  const long long n = choose2(d + 2);
  long long dim = static_cast<long long>(c.triangles().size()) * n;
  dim -= static_cast<long long>(c.interior_edges().size()) * (n - choose2(d - r + 1));
  for (auto v : c.interior_vertices()) {
    const int k = static_cast<int>(detail::forms_at(c, v, std::nullopt).size());
    dim += schumaker_local(k, r).hilbert(d);
  }
  return dim + h0_hilbert_oracle(c, r, d);
}

namespace detail {

// Index of x^i y^j among bivariate monomials of degree <= d.
inline std::size_t affine_index(int i, int j, int d) {
  (void)d;
  const int t = i + j;
  return static_cast<std::size_t>(t * (t + 1) / 2 + j);
}

}  // namespace detail

/// dim C^r_d by brute force: one polynomial of degree <= d per triangle,
/// and across every interior edge f1 - f2 must lie in <l^{r+1}>. With
/// u = l and w a transverse coordinate, that means every coefficient of
/// u^p w^m with p <= r vanishes.
inline long long spline_dim_oracle(const SimplicialComplex& c, int r, int d) {
  const std::size_t per = static_cast<std::size_t>(choose2(d + 2));
  const std::size_t unknowns = per * c.triangles().size();
  IntegerEchelon ech(unknowns);
  std::vector<Integer> pw;

  for (auto e : c.interior_edges()) {
    const auto& tris = c.edge_triangles(e);
    const LinearForm l = c.edge_form(e);  // A x + B y + C on z = 1
    // Solve l = u for one coordinate: if B != 0, y = (u - A w - C) / B with
    // w = x, else x = (u - C) / A with w = y.
    const bool solve_y = l.b != 0;
    const Integer lead = solve_y ? l.b : l.a;
    const Integer other = solve_y ? l.a : l.b;  // coefficient of w inside
    const Integer cst = l.c;
    // conditions[(p, m)] over unknowns of this edge's monomials.
    std::map<std::pair<int, int>, std::map<std::size_t, Integer>> rows;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) {
        // Monomial x^i y^j scaled by lead^d: the solved variable carries the
        // binomial expansion, the kept one becomes w.
        const int solved = solve_y ? j : i;
        const int kept = solve_y ? i : j;
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(d - solved));
        // (u - other*w - cst)^solved
        for (int p = 0; p <= std::min(solved, r); ++p)
          for (int q = 0; p + q <= solved; ++q) {
            const int t = solved - p - q;
            Integer coef = binomial(static_cast<unsigned long>(solved), static_cast<unsigned long>(p)) *
                           binomial(static_cast<unsigned long>(solved - p), static_cast<unsigned long>(q));
            Integer a;
            mpz_pow_ui(a.get_mpz_t(), Integer(-other).get_mpz_t(), static_cast<unsigned long>(q));
            coef *= a;
            mpz_pow_ui(a.get_mpz_t(), Integer(-cst).get_mpz_t(), static_cast<unsigned long>(t));
            coef *= a;
            coef *= scale;
            if (coef == 0) continue;
            const std::size_t local = detail::affine_index(i, j, d);
            auto& row = rows[{p, kept + q}];
            row[tris[0] * per + local] += coef;
            row[tris[1] * per + local] -= coef;
          }
      }
    for (auto& [key, row] : rows) {
      SparseVec v;
      for (auto& [idx, val] : row)
        if (val != 0) v.emplace_back(idx, val);
      ech.insert(std::move(v));
    }
  }
  return static_cast<long long>(unknowns - ech.rank());
}

}  // namespace splinereg
