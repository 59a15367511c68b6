#pragma once

// Buchberger graph of a monomial ideal, the closed-form syzygy lists for the
// In Q family, and a multigraded Betti-number oracle built on upper Koszul
// simplicial complexes.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "splinereg/error.hpp"
#include "splinereg/linalg.hpp"
#include "splinereg/monomial.hpp"
#include "splinereg/powers_forms.hpp"

namespace splinereg {

struct BuchEdge {
  std::size_t i, j;
  Monomial lcm;
};

/// A bounded region of the planar Buchberger graph; `cycle` lists its
/// boundary nodes counterclockwise.
struct BuchFace {
  std::vector<std::size_t> cycle;
  Monomial lcm;
};

struct BuchGraph {
  std::vector<Monomial> nodes;
  std::vector<BuchEdge> edges;
  std::vector<BuchFace> faces;

  long long euler_characteristic() const {
    return static_cast<long long>(nodes.size()) - static_cast<long long>(edges.size()) +
           static_cast<long long>(faces.size());
  }
};

namespace detail {

struct Point {
  long long x, y;
};

inline long long cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline bool on_segment(Point p, Point a, Point b) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool segments_meet(Point a, Point b, Point c, Point d) {
  long long d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  return on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b);
}

// Counterclockwise angular order of direction vectors, starting at angle 0.
inline bool angle_less(Point u, Point v) {
  auto half = [](Point p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  if (half(u) != half(v)) return half(u) < half(v);
  return u.x * v.y - u.y * v.x > 0;
}

}  // namespace detail

/// Edges join pairs whose lcm no third generator divides. Faces are the
/// bounded regions of the straight-line drawing that puts x^a y^b z^c at
/// (a, b); for ideals whose generators are pure in x or in y up to z-powers
/// (the In Q family) that drawing is a plane embedding. Throws
/// InvalidArgument when the drawing is not one.
inline BuchGraph buchberger_graph(const MonomialIdeal& ideal) {
  if (ideal.empty()) throw Error(ErrorKind::InvalidArgument, "Buchberger graph of the zero ideal");
  BuchGraph g;
  g.nodes = ideal.gens();
  const auto& n = g.nodes;
  const std::size_t count = n.size();
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) {
      Monomial l = mono_lcm(n[i], n[j]);
      bool blocked = false;
      for (std::size_t t = 0; t < count && !blocked; ++t)
        blocked = t != i && t != j && n[t].divides(l);
      if (!blocked) g.edges.push_back({i, j, l});
    }

  std::vector<detail::Point> pos(count);
  for (std::size_t i = 0; i < count; ++i) pos[i] = {n[i].ex, n[i].ey};
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (pos[i].x == pos[j].x && pos[i].y == pos[j].y)
        throw Error(ErrorKind::InvalidArgument, "generators share an (x, y)-exponent; no plane drawing");
  for (std::size_t p = 0; p < g.edges.size(); ++p) {
    const auto& e = g.edges[p];
    for (std::size_t t = 0; t < count; ++t)
      if (t != e.i && t != e.j && detail::on_segment(pos[t], pos[e.i], pos[e.j]))
        throw Error(ErrorKind::InvalidArgument, "a generator lies on the edge " + to_string(e.lcm));
    for (std::size_t q = p + 1; q < g.edges.size(); ++q) {
      const auto& f = g.edges[q];
      if (e.i == f.i || e.i == f.j || e.j == f.i || e.j == f.j) continue;
      if (detail::segments_meet(pos[e.i], pos[e.j], pos[f.i], pos[f.j]))
        throw Error(ErrorKind::InvalidArgument, "edges " + to_string(e.lcm) + " and " + to_string(f.lcm) + " cross");
    }
  }

  // Rotation system: neighbours of each node in counterclockwise order.
  std::vector<std::vector<std::size_t>> around(count);
  for (const auto& e : g.edges) {
    around[e.i].push_back(e.j);
    around[e.j].push_back(e.i);
  }
  for (std::size_t v = 0; v < count; ++v)
    std::sort(around[v].begin(), around[v].end(), [&](std::size_t a, std::size_t b) {
      detail::Point da{pos[a].x - pos[v].x, pos[a].y - pos[v].y};
      detail::Point db{pos[b].x - pos[v].x, pos[b].y - pos[v].y};
      return detail::angle_less(da, db);
    });

  // Walk every directed edge once, always turning to the clockwise-next
  // neighbour; bounded faces come out counterclockwise (positive area).
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (const auto& e : g.edges)
    for (auto [u0, v0] : {std::pair{e.i, e.j}, std::pair{e.j, e.i}}) {
      if (used.count({u0, v0})) continue;
      std::vector<std::size_t> cycle;
      std::size_t u = u0, v = v0;
      while (used.insert({u, v}).second) {
        cycle.push_back(u);
        const auto& nb = around[v];
        auto it = std::find(nb.begin(), nb.end(), u);
        std::size_t w = it == nb.begin() ? nb.back() : *(it - 1);
        u = v;
        v = w;
      }
      long long area2 = 0;
      for (std::size_t t = 0; t < cycle.size(); ++t) {
        const auto& a = pos[cycle[t]];
        const auto& b = pos[cycle[(t + 1) % cycle.size()]];
        area2 += a.x * b.y - a.y * b.x;
      }
      if (area2 <= 0) continue;
      Monomial l = n[cycle.front()];
      for (auto c : cycle) l = mono_lcm(l, n[c]);
      g.faces.push_back({std::move(cycle), l});
    }
  std::sort(g.faces.begin(), g.faces.end(), [](const BuchFace& a, const BuchFace& b) { return a.lcm > b.lcm; });
  return g;
}

namespace detail {

inline std::vector<Monomial> sorted_unique(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), std::greater<>());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

}  // namespace detail

/// Second syzygies of In Q read off the two staircases, lex-descending.
inline std::vector<Monomial> syz2_closed_form(const QData& q) {
  if (q.trivial()) throw Error(ErrorKind::TrivialIdeal, "In Q is the unit ideal");
  const auto& lp = q.lambda_prime();
  const auto& ep = q.eta_prime();
  const int i0 = q.i0(), j0 = q.j0(), l0 = q.l0;
  std::vector<Monomial> out;
  // Consecutive x-staircase generators, and the corner against z^{eta'_0}.
  for (int i = l0 + 1; i <= i0; ++i) out.push_back({i, 0, lp[i - 1]});
  out.push_back({l0, 0, ep[0]});
  for (int j = 1; j <= j0; ++j) out.push_back({0, j, ep[j - 1]});
  // Mixed lcms x^i y^j z^t; index l0 - 1 still has lambda'_{l0-1} >= eta'_0.
  for (int i = std::max(l0, 1); i <= i0; ++i)
    for (int j = 1; j <= j0; ++j) {
      if (lp[i] <= ep[j] && ep[j] < lp[i - 1]) out.push_back({i, j, ep[j]});
      if (ep[j] <= lp[i] && lp[i] < ep[j - 1]) out.push_back({i, j, lp[i]});
    }
  return detail::sorted_unique(std::move(out));
}

/// Face lcms ordered by increasing z-degree. Throws NonMonotone unless the
/// z-degrees are pairwise distinct and total degrees weakly decrease.
inline std::vector<Monomial> syz3_closed_form(const BuchGraph& g) {
  std::vector<Monomial> out;
  for (const auto& f : g.faces) out.push_back(f.lcm);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.ez != b.ez) return a.ez < b.ez;
    return a > b;
  });
  for (std::size_t t = 1; t < out.size(); ++t) {
    if (out[t].ez == out[t - 1].ez)
      throw Error(ErrorKind::NonMonotone, "two faces share z-degree " + std::to_string(out[t].ez));
    if (out[t].degree() > out[t - 1].degree())
      throw Error(ErrorKind::NonMonotone, "face " + to_string(out[t]) + " has larger degree than " + to_string(out[t - 1]));
  }
  return out;
}

/// beta_{i,b}(I): i = 0 generators, 1 second syzygies, 2 third syzygies.
struct BettiTable {
  std::map<std::pair<int, Monomial>, long long> entries;

  long long at(int i, const Monomial& b) const {
    auto it = entries.find({i, b});
    return it == entries.end() ? 0 : it->second;
  }

  /// Multidegrees at homological index i, each repeated by multiplicity, lex-descending.
  std::vector<Monomial> multidegrees(int i) const {
    std::vector<Monomial> out;
    for (const auto& [key, n] : entries)
      if (key.first == i)
        for (long long t = 0; t < n; ++t) out.push_back(key.second);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  long long total(int i) const {
    long long s = 0;
    for (const auto& [key, n] : entries)
      if (key.first == i) s += n;
    return s;
  }

  int max_index() const {
    int m = -1;
    for (const auto& [key, n] : entries) m = std::max(m, key.first);
    return m;
  }

  /// HF(S/I, d) from the Betti numbers of I.
  long long hilbert_function(int d) const {
    long long h = monomial_count(d);
    for (const auto& [key, n] : entries) {
      long long term = n * monomial_count(d - key.second.degree());
      h += (key.first % 2 == 0) ? -term : term;
    }
    return h;
  }
};

namespace detail {

// Reduced homology dimensions of a subcomplex of the 2-simplex on {x, y, z}.
// Faces are bitmasks over the three vertices; the empty face sits in degree -1.
inline std::array<long long, 4> reduced_homology(const std::vector<unsigned>& faces) {
  auto dim_of = [](unsigned f) { return std::popcount(f) - 1; };
  std::array<std::vector<unsigned>, 4> by_dim;  // dims -1..2 stored at 0..3
  for (unsigned f : faces) by_dim[static_cast<std::size_t>(dim_of(f) + 1)].push_back(f);

  // rank of boundary C_k -> C_{k-1}, k = 0..2 (stored at k + 1).
  std::array<std::size_t, 4> rk{0, 0, 0, 0};
  for (int k = 0; k <= 2; ++k) {
    const auto& hi = by_dim[static_cast<std::size_t>(k + 1)];
    const auto& lo = by_dim[static_cast<std::size_t>(k)];
    if (hi.empty() || lo.empty()) continue;
    RatMatrix m(lo.size(), hi.size());
    for (std::size_t c = 0; c < hi.size(); ++c) {
      int sign = 1;
      for (unsigned v = 0; v < 3; ++v) {
        if (!(hi[c] & (1u << v))) continue;
        unsigned sub = hi[c] & ~(1u << v);
        auto it = std::find(lo.begin(), lo.end(), sub);
        if (it != lo.end()) m(static_cast<std::size_t>(it - lo.begin()), c) = sign;
        sign = -sign;
      }
    }
    rk[static_cast<std::size_t>(k + 1)] = rank(m);
  }
  std::array<long long, 4> h{};
  for (int k = -1; k <= 2; ++k) {
    auto idx = static_cast<std::size_t>(k + 1);
    long long out_rank = idx == 0 ? 0 : static_cast<long long>(rk[idx]);
    long long in_rank = idx == 3 ? 0 : static_cast<long long>(rk[idx + 1]);
    h[idx] = static_cast<long long>(by_dim[idx].size()) - out_rank - in_rank;
  }
  return h;
}

}  // namespace detail

/// Multigraded Betti numbers of I via upper Koszul complexes
/// K^b = { tau subset of {x,y,z} : b - tau in I }, beta_{i,b} = dim H~_{i-1}(K^b).
inline BettiTable betti_oracle(const MonomialIdeal& ideal) {
  BettiTable table;
  if (ideal.empty()) return table;
  // Betti numbers of a monomial ideal live on its lcm lattice.
  std::set<Monomial> lattice(ideal.gens().begin(), ideal.gens().end());
  std::vector<Monomial> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    const std::vector<Monomial> snapshot(lattice.begin(), lattice.end());
    for (const auto& a : frontier)
      for (const auto& b : snapshot) {
        Monomial l = mono_lcm(a, b);
        if (lattice.insert(l).second) next.push_back(l);
      }
    frontier = std::move(next);
  }
  for (const auto& b : lattice) {
    std::vector<unsigned> faces;
    for (unsigned tau = 0; tau < 8; ++tau) {
      Monomial m{b.ex - ((tau & 1u) ? 1 : 0), b.ey - ((tau & 2u) ? 1 : 0), b.ez - ((tau & 4u) ? 1 : 0)};
      if (m.ex < 0 || m.ey < 0 || m.ez < 0) continue;
      if (ideal.contains(m)) faces.push_back(tau);
    }
    auto h = detail::reduced_homology(faces);
    for (int i = 0; i <= 3; ++i)
      if (h[static_cast<std::size_t>(i)] != 0) table.entries[{i, b}] = h[static_cast<std::size_t>(i)];
  }
  return table;
}

/// The bottom face x^{i0} y^{j0} z^{zeta0}, zeta0 = min(lambda'_{i0-1}, eta'_{j0-1}).
inline Monomial bottom_face(const QData& q) {
  if (q.trivial()) throw Error(ErrorKind::TrivialIdeal, "In Q is the unit ideal");
  const int zeta0 = std::min(q.lambda_prime()[static_cast<std::size_t>(q.i0() - 1)],
                             q.eta_prime()[static_cast<std::size_t>(q.j0() - 1)]);
  return {q.i0(), q.j0(), zeta0};
}

/// reg H0(J.) = deg(bottom face) - 3 + (r + 1), checked against the socle
/// degree of S / In Q shifted by r + 1.
inline int regularity_from_bottom_face(const QData& q) {
  const Monomial h0 = bottom_face(q);
  if (h0.ez < 1 || h0.ez > 2)
    throw Error(ErrorKind::SocleMismatch, "zeta0 = " + std::to_string(h0.ez) + " outside {1, 2}");
  const int reg = h0.degree() - 3 + (q.r + 1);
  const int socle = max_socle_degree(q.in_q);
  if (socle + q.r + 1 != reg)
    throw Error(ErrorKind::SocleMismatch, "bottom face gives " + std::to_string(reg) + ", socle route gives " +
                                              std::to_string(socle + q.r + 1));
  return reg;
}

}  // namespace splinereg
