// Acceptance suite: one PASS/FAIL line per criterion, with timings.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"

using namespace splinereg;
using fixtures::sample;

namespace {

Monomial m(int x, int y, int z) { return {x, y, z}; }

struct Result {
  bool pass = true;
  std::string detail;
};

// Collects mismatches; keeps the first few messages.
struct Tally {
  long long checks = 0;
  long long failures = 0;
  std::ostringstream first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures < 3) first << (failures ? "; " : "") << what;
    ++failures;
  }

  Result result(const std::string& summary) const {
    Result r;
    r.pass = failures == 0;
    r.detail = summary + ", " + std::to_string(checks) + " checks, " + std::to_string(failures) + " violations";
    if (failures) r.detail += " (" + first.str() + ")";
    return r;
  }
};

std::string cell(int a, int b, int r) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(r) + ")";
}

std::vector<Monomial> desc(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

template <class F>
void guarded(Tally& t, const std::string& where, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    t.expect(false, where + ": " + e.what());
  }
}

// 1 -------------------------------------------------------------------------
Result worked_example() {
  Tally t;
  const std::vector<Rational> s1{Rational(0), Rational(1)}, s2{Rational(0), Rational(1), Rational(2)};

  const MonomialIdeal in_j2{m(0, 9, 0), m(0, 8, 1), m(0, 7, 2), m(0, 6, 4),  m(0, 5, 5),
                            m(0, 4, 7), m(0, 3, 8), m(0, 2, 10), m(0, 1, 11), m(0, 0, 13)};
  const auto q = build_q(3, 4, 8);
  t.expect(staircase_ideal(q.stair2, Var::Y) == in_j2, "In(J'(v2)) closed form");
  t.expect(initial_ideal_oracle(8, s2, 15, Var::Y) == in_j2, "In(J'(v2)) oracle");

  // Corrected list for v1 (x^2 z^13, x z^15), confirmed by the oracle.
  const MonomialIdeal in_j1{m(9, 0, 0), m(8, 0, 1), m(7, 0, 3),  m(6, 0, 5),  m(5, 0, 7),
                            m(4, 0, 9), m(3, 0, 11), m(2, 0, 13), m(1, 0, 15), m(0, 0, 17)};
  t.expect(staircase_ideal(q.stair1, Var::X) == in_j1, "In(J'(v1)) closed form");
  t.expect(initial_ideal_oracle(8, s1, 19, Var::X) == in_j1, "In(J'(v1)) oracle");

  const MonomialIdeal in_q{m(4, 0, 0), m(3, 0, 2), m(0, 3, 0), m(0, 2, 1), m(0, 1, 2), m(0, 0, 4)};
  t.expect(q.in_q == in_q, "In Q");
  t.expect(sum_initial_oracle(8, s1, s2, 12) == in_q, "In Q oracle");

  const auto syz2 = desc({m(4, 0, 2), m(3, 0, 4), m(0, 3, 1), m(0, 2, 2), m(0, 1, 4), m(4, 3, 0), m(4, 2, 1), m(3, 1, 2)});
  const std::vector<Monomial> syz3{m(4, 3, 1), m(4, 2, 2), m(3, 1, 4)};
  const auto g = buchberger_graph(q.in_q);
  t.expect(syz2_closed_form(q) == syz2, "second syzygies");
  t.expect(syz3_closed_form(g) == syz3, "third syzygies");
  const auto betti = betti_oracle(q.in_q);
  t.expect(betti.multidegrees(1) == syz2 && betti.multidegrees(2) == desc(syz3), "Betti oracle");
  t.expect(max_socle_degree(q.in_q) == 5, "reg In Q = 5");
  t.expect(bottom_face(q) == m(4, 3, 1), "bottom face");
  t.expect(regularity_one_edge(3, 4, 8).exact == 14, "reg H0 = 14");
  return t.result("In(J'(v1)), In(J'(v2)), In Q, 8 + 3 syzygies, reg In Q = 5");
}

// 2 -------------------------------------------------------------------------
Result three_three() {
  Tally t;
  for (int r = 1; r <= 12; ++r) {
    guarded(t, "r=" + std::to_string(r), [&] {
      const auto q = build_q(3, 3, r);
      t.expect(regularity_from_bottom_face(q) == 2 * r, "bottom face r=" + std::to_string(r));
      t.expect(max_socle_degree(q.in_q) + r + 1 == 2 * r, "socle r=" + std::to_string(r));
    });
  }
  const auto c = sample("one_edge_3_3");
  for (int r = 1; r <= 4; ++r)
    guarded(t, "chain r=" + std::to_string(r), [&] {
      const auto rep = regularity_from_complex(c, r);
      t.expect(rep.exact == 2 * r && rep.chain_route && *rep.chain_route == 2 * r,
               "chain-complex oracle r=" + std::to_string(r));
    });
  return t.result("r = 1..12 by bottom face and socle, r = 1..4 by the chain-complex oracle");
}

// 3, 4, 7, 8 share the grid -------------------------------------------------
template <class F>
void for_grid(int r_lo, F&& f) {
  for (int a = 3; a <= 8; ++a)
    for (int b = a; b <= 8; ++b)
      for (int r = r_lo; r <= 12; ++r) f(a, b, r);
}

Result sandwich() {
  Tally t;
  int cells = 0;
  for_grid(1, [&](int a, int b, int r) {
    guarded(t, cell(a, b, r), [&] {
      const auto rep = regularity_one_edge(a, b, r);
      if (!rep.exact) return;
      ++cells;
      const int lo = (r + 1) / (a - 1) + (r + 1) / (b - 1) + r - 1;
      t.expect(lo <= *rep.exact && *rep.exact <= lo + 1, cell(a, b, r));
    });
  });
  return t.result(std::to_string(cells) + " nontrivial cells");
}

Result two_r() {
  Tally t;
  for_grid(1, [&](int a, int b, int r) {
    guarded(t, cell(a, b, r), [&] {
      const auto rep = regularity_one_edge(a, b, r);
      if (rep.exact) t.expect(check_2r_theorem(rep) && *rep.exact <= 2 * r, cell(a, b, r));
    });
  });
  int complexes = 0;
  for (const char* name : {"one_edge_3_3", "one_edge_3_4"})
    for (int r = 1; r <= 4; ++r)
      guarded(t, name, [&] {
        const auto rep = regularity_from_complex(sample(name), r);
        ++complexes;
        if (rep.exact) t.expect(check_2r_theorem(rep), std::string(name) + " r=" + std::to_string(r));
      });
  guarded(t, "one_edge_3_4 r=8", [&] {
    const auto rep = regularity_from_complex(sample("one_edge_3_4"), 8);
    ++complexes;
    t.expect(rep.exact == 14 && check_2r_theorem(rep), "one_edge_3_4 r=8");
  });
  return t.result("grid plus " + std::to_string(complexes) + " complex runs");
}

// 5 -------------------------------------------------------------------------
Result lemma_oracle() {
  Tally t;
  std::mt19937_64 rng(20260101);
  for (int s = 2; s <= 6; ++s)
    for (int r = 0; r <= 12; ++r) {
      const auto st = staircase_closed_form(r, s);
      const auto closed = staircase_ideal(st, Var::X);
      for (int trial = 0; trial < 5; ++trial) {
        const auto slopes = fixtures::random_slopes(rng, s);
        guarded(t, "s=" + std::to_string(s), [&] {
          t.expect(initial_ideal_oracle(r, slopes, st.lambda[0] + 2) == closed,
                   "s=" + std::to_string(s) + " r=" + std::to_string(r));
        });
      }
    }
  return t.result("s = 2..6, r = 0..12, 5 random slope sets each");
}

// 6 -------------------------------------------------------------------------
Result colon_and_sum() {
  Tally t;
  std::mt19937_64 rng(20260202);
  for (int s = 2; s <= 4; ++s)
    for (int r = 0; r <= 8; ++r) {
      const auto st = staircase_closed_form(r, s);
      const auto expected = colon_ideal(colon_staircase(st));
      t.expect(expected == colon_by_monomial(staircase_ideal(st), m(0, 0, r + 1)), "colon of closed form");
      for (int trial = 0; trial < 3; ++trial) {
        const auto slopes = fixtures::random_slopes(rng, s);
        guarded(t, "colon", [&] {
          t.expect(colon_initial_oracle(r, slopes, st.lambda[0] + 2) == expected,
                   "colon s=" + std::to_string(s) + " r=" + std::to_string(r));
        });
      }
    }
  for (int a = 3; a <= 5; ++a)
    for (int b = a; b <= 5; ++b)
      for (int r = 0; r <= 8; ++r) {
        const auto q = build_q(a, b, r);
        for (int trial = 0; trial < 3; ++trial) {
          const auto s1 = fixtures::random_slopes(rng, a - 1), s2 = fixtures::random_slopes(rng, b - 1);
          guarded(t, "sum", [&] {
            t.expect(sum_initial_oracle(r, s1, s2, q.stair1.lambda[0] + 2) == q.in_q, "sum " + cell(a, b, r));
          });
        }
      }
  return t.result("colon for s = 2..4, sum for slope counts 2..4, r = 0..8");
}

// 7 -------------------------------------------------------------------------
Result syzygy_betti() {
  Tally t;
  int cells = 0;
  for_grid(1, [&](int a, int b, int r) {
    const auto q = build_q(a, b, r);
    if (q.trivial()) return;
    ++cells;
    guarded(t, cell(a, b, r), [&] {
      const auto g = buchberger_graph(q.in_q);
      const auto betti = betti_oracle(q.in_q);
      t.expect(betti.multidegrees(1) == syz2_closed_form(q), "syz2 " + cell(a, b, r));
      t.expect(betti.multidegrees(2) == desc(syz3_closed_form(g)), "syz3 " + cell(a, b, r));
      bool mult_one = true;
      for (const auto& [key, n] : betti.entries) mult_one = mult_one && n == 1;
      t.expect(mult_one, "multiplicity " + cell(a, b, r));
      t.expect(g.euler_characteristic() == 1, "V-E+F " + cell(a, b, r));
      const int socle = max_socle_degree(q.in_q);
      for (int d = 0; d <= socle + 2; ++d)
        t.expect(betti.hilbert_function(d) == hilbert_function(q.in_q, d), "Euler/Hilbert " + cell(a, b, r));
    });
  });
  return t.result(std::to_string(cells) + " nontrivial cells");
}

// 8 -------------------------------------------------------------------------
Result lemma_order() {
  Tally t;
  int faces = 0;
  for_grid(0, [&](int a, int b, int r) {
    const auto q = build_q(a, b, r);
    if (q.trivial()) return;
    guarded(t, cell(a, b, r), [&] {
      const auto g = buchberger_graph(q.in_q);
      std::vector<Monomial> f;
      for (const auto& face : g.faces) f.push_back(face.lcm);
      std::sort(f.begin(), f.end(), [](const Monomial& x, const Monomial& y) { return x.ez < y.ez; });
      faces += static_cast<int>(f.size());
      for (std::size_t k = 1; k < f.size(); ++k) {
        t.expect(f[k - 1].ez < f[k].ez, "z-degree " + cell(a, b, r));
        t.expect(f[k - 1].degree() >= f[k].degree(), "total degree " + cell(a, b, r));
      }
      t.expect(syz3_closed_form(g) == f, "closed form order " + cell(a, b, r));
    });
  });
  return t.result(std::to_string(faces) + " third syzygies");
}

// 9 -------------------------------------------------------------------------
Result dimension_formula() {
  Tally t;
  const char* names[] = {"single_triangle", "two_triangles", "star4", "square_diagonals",
                         "one_edge_3_3",    "one_edge_3_4",  "two_edge_path"};
  for (const char* name : names) {
    const auto c = sample(name);
    for (int r = 0; r <= 3; ++r)
      for (int d = 0; d <= 10; ++d)
        guarded(t, name, [&] {
          t.expect(spline_dim_formula(c, r, d) == spline_dim_oracle(c, r, d),
                   std::string(name) + " r=" + std::to_string(r) + " d=" + std::to_string(d));
        });
  }
  return t.result("7 complexes, r = 0..3, d = 0..10");
}

// 10 ------------------------------------------------------------------------
Result path_containment() {
  Tally t;
  const auto c = sample("two_edge_path");
  std::ostringstream seen;
  for (int r = 0; r <= 3; ++r)
    guarded(t, "r=" + std::to_string(r), [&] {
      const auto pb = path_bounds(c, r, true);
      const auto& o = *pb.oracle;
      seen << " r=" << r << ": " << (o ? std::to_string(*o) : std::string("H0 = 0")) << " vs [" << *pb.lower << ","
           << *pb.upper << "]";
      if (pb.module_vanishes)
        seen << " (vanishing module, bounds not asserted)";
      else
        t.expect(pb.within == true, "r=" + std::to_string(r));
    });
  return t.result("two-edge path;" + seen.str());
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no limit
    std::function<Result()> run;
  };
  const Criterion criteria[] = {
      {1, "worked example (3,4,8)", 1.0, worked_example},
      {2, "(3,3) regularity equals 2r by three routes", 30.0, three_three},
      {3, "main-theorem sandwich on the grid", 120.0, sandwich},
      {4, "reg <= 2r on the grid and constructed complexes", 0, two_r},
      {5, "staircase closed form equals the rank oracle", 120.0, lemma_oracle},
      {6, "colon and sum initial-ideal identities", 0, colon_and_sum},
      {7, "syzygies equal upper-Koszul Betti multidegrees", 0, syzygy_betti},
      {8, "third-syzygy order by z-degree", 0, lemma_order},
      {9, "spline dimension formula equals brute force", 300.0, dimension_formula},
      {10, "path bounds contain the oracle regularity", 0, path_containment},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res = {false, std::string("uncaught: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      res.pass = false;
      res.detail += ", over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    failed += !res.pass;
    std::printf("%s [%2d] %-50s %8.3f s  %s\n", res.pass ? "PASS" : "FAIL", c.id, c.name, secs, res.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
