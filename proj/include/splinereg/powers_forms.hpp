#pragma once

// Lex initial ideals of ideals generated by (r+1)-st powers of linear forms
// (v + c z)^{r+1}, v in {x, y}, together with the colon by z^{r+1} and the
// combined quotient ideal In Q of the one-edge configuration.
//
// Each closed form here has a brute-force counterpart (*_oracle) that works
// degree by degree with exact rank computations and never looks at the
// closed form.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "splinereg/error.hpp"
#include "splinereg/linalg.hpp"
#include "splinereg/monomial.hpp"
#include "splinereg/rational.hpp"

namespace splinereg {

/// In(<(v + c_1 z)^{r+1}, ..., (v + c_s z)^{r+1}>) = <v^{r+1}, v^i z^{lambda[i]} : 0 <= i <= r>.
struct Staircase {
  int r = 0;
  int s = 0;
  std::vector<int> lambda;  // lambda[i] for i = 0..r
};

/// The colon of a staircase ideal by z^{r+1}: generators v^i z^{lambda_prime[i]}, i = 0..i0.
struct ColonStaircase {
  int i0 = 0;
  std::vector<int> lambda_prime;  // indices 0..i0, lambda_prime[i0] == 0
};

/// In Q for the one-edge configuration: colon1 lives in (x, z), colon2 in (y, z).
struct QData {
  int a = 0;
  int b = 0;
  int r = 0;
  Staircase stair1;
  Staircase stair2;
  ColonStaircase colon1;
  ColonStaircase colon2;
  int l0 = 0;  // least i with lambda'_i < eta'_0; meaningless when trivial()
  MonomialIdeal in_q;

  bool trivial() const { return in_q.is_unit(); }
  int i0() const { return colon1.i0; }
  int j0() const { return colon2.i0; }
  const std::vector<int>& lambda_prime() const { return colon1.lambda_prime; }
  const std::vector<int>& eta_prime() const { return colon2.lambda_prime; }
};

inline int floor_div(int num, int den) {
  int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline Staircase staircase_closed_form(int r, int s) {
  if (s < 2) throw Error(ErrorKind::InvalidSlopeCount, "need at least two distinct slopes, got " + std::to_string(s));
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "smoothness r must be >= 0");
  Staircase st{r, s, std::vector<int>(static_cast<std::size_t>(r + 1))};
  for (int i = 0; i <= r; ++i) st.lambda[i] = (r - i + 1) + floor_div(r - i, s - 1);
  return st;
}

/// The staircase as an ideal in (v, z).
inline MonomialIdeal staircase_ideal(const Staircase& st, Var v = Var::X) {
  std::vector<Monomial> gens{Monomial::pure(v, st.r + 1)};
  for (int i = 0; i <= st.r; ++i) {
    Monomial m = Monomial::pure(v, i);
    m.ez = st.lambda[i];
    gens.push_back(m);
  }
  return MonomialIdeal(std::move(gens));
}

inline ColonStaircase colon_staircase(const Staircase& st) {
  ColonStaircase out;
  out.i0 = -1;
  for (int i = 0; i <= st.r; ++i)
    if (st.lambda[i] <= st.r + 1) {
      out.i0 = i;
      break;
    }
  // lambda[r] = 1 <= r + 1, so i0 always exists.
  for (int i = 0; i <= out.i0; ++i) out.lambda_prime.push_back(std::max(0, st.lambda[i] - st.r - 1));
  return out;
}

inline MonomialIdeal colon_ideal(const ColonStaircase& cs, Var v = Var::X) {
  std::vector<Monomial> gens;
  for (int i = 0; i <= cs.i0; ++i) {
    Monomial m = Monomial::pure(v, i);
    m.ez = cs.lambda_prime[i];
    gens.push_back(m);
  }
  return MonomialIdeal(std::move(gens));
}

/// Requires 3 <= a <= b (a = k(v1), b = k(v2)); each vertex contributes
/// k - 1 forms besides the shared edge.
inline QData build_q(int a, int b, int r) {
  if (a < 3 || b < 3)
    throw Error(ErrorKind::InvalidSlopeCount,
                "a and b must be >= 3, got (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  if (a > b) throw Error(ErrorKind::InvalidArgument, "build_q expects a <= b");
  QData q;
  q.a = a;
  q.b = b;
  q.r = r;
  q.stair1 = staircase_closed_form(r, a - 1);
  q.stair2 = staircase_closed_form(r, b - 1);
  q.colon1 = colon_staircase(q.stair1);
  q.colon2 = colon_staircase(q.stair2);
  const int eta0 = q.colon2.lambda_prime[0];
  q.l0 = q.colon1.i0;
  for (int i = 0; i <= q.colon1.i0; ++i)
    if (q.colon1.lambda_prime[i] < eta0) {
      q.l0 = i;
      break;
    }
  q.in_q = ideal_sum(colon_ideal(q.colon1, Var::X), colon_ideal(q.colon2, Var::Y));
  return q;
}

namespace detail {

inline void check_slopes(const std::vector<Rational>& slopes) {
  if (slopes.empty()) throw Error(ErrorKind::InvalidSlopeCount, "no slopes given");
  std::set<Rational> seen(slopes.begin(), slopes.end());
  if (seen.size() != slopes.size()) throw Error(ErrorKind::DuplicateSlope, "slopes must be pairwise distinct");
}

// Coefficients of (v + c z)^{r+1} * v^{e-m} z^m in degree n = r + 1 + e,
// indexed by z-exponent (index 0 is v^n).
inline std::vector<Rational> shifted_power(int r, const Rational& c, int n, int m) {
  std::vector<Rational> col(static_cast<std::size_t>(n + 1));
  Rational cp = 1;
  for (int k = 0; k <= r + 1; ++k) {
    col[static_cast<std::size_t>(k + m)] = Rational(binomial(static_cast<unsigned long>(r + 1), static_cast<unsigned long>(k))) * cp;
    cp *= c;
  }
  return col;
}

// Adds degree-d leading monomials to an accumulating generator list.
inline void accumulate(std::vector<Monomial>& gens, const std::vector<Monomial>& leads) {
  std::vector<Monomial> fresh;
  for (const auto& m : leads)
    if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); })) fresh.push_back(m);
  gens.insert(gens.end(), fresh.begin(), fresh.end());
}

inline Monomial two_var(Var v, int ev, int ez) {
  Monomial m = Monomial::pure(v, ev);
  m.ez = ez;
  return m;
}

}  // namespace detail

/// Lex initial ideal of <(v + c z)^{r+1} : c in slopes> from the pivot rows
/// of the degree-d coefficient matrices, d = r+1..d_max. Stops early once a
/// whole degree is reached, since every later degree is then full too.
inline MonomialIdeal initial_ideal_oracle(int r, const std::vector<Rational>& slopes, int d_max, Var v = Var::X) {
  detail::check_slopes(slopes);
  std::vector<Monomial> gens;
  for (int d = r + 1; d <= d_max; ++d) {
    const int e = d - r - 1;
    std::vector<std::vector<Rational>> cols;
    for (const auto& c : slopes)
      for (int m = 0; m <= e; ++m) cols.push_back(detail::shifted_power(r, c, d, m));
    auto pivots = pivot_rows(RatMatrix::from_columns(static_cast<std::size_t>(d + 1), cols));
    std::vector<Monomial> leads;
    for (auto j : pivots) leads.push_back(detail::two_var(v, d - static_cast<int>(j), static_cast<int>(j)));
    detail::accumulate(gens, leads);
    if (pivots.size() == static_cast<std::size_t>(d + 1)) break;
  }
  return MonomialIdeal(std::move(gens));
}

/// Basis of the degree-e part of (J : z^{r+1}) for J = <(v + c z)^{r+1}>,
/// as integer vectors indexed by z-exponent. A vector f is in the colon iff
/// z^{r+1} f lies in J_{e+r+1}, i.e. iff the J-vector vanishes on the first
/// r + 1 coordinates; those are spanned by the echelon vectors leading there.
inline std::vector<SparseVec> colon_degree_basis(int r, const std::vector<Rational>& slopes, int e) {
  const int n = e + r + 1;
  std::vector<std::vector<Rational>> cols;
  for (const auto& c : slopes)
    for (int m = 0; m <= e; ++m) cols.push_back(detail::shifted_power(r, c, n, m));
  IntegerEchelon ech(static_cast<std::size_t>(n + 1));
  for (const auto& col : cols) ech.insert(to_integer_vector(col));

  const RatMatrix span_j = RatMatrix::from_columns(static_cast<std::size_t>(n + 1), cols);
  std::vector<SparseVec> out;
  for (std::size_t lead = static_cast<std::size_t>(r + 1); lead <= static_cast<std::size_t>(n); ++lead) {
    const auto& vec = ech.at_lead(lead);
    if (!vec) continue;
    SparseVec f;
    std::vector<Rational> zf(static_cast<std::size_t>(n + 1));
    for (const auto& [i, a] : *vec) {
      f.emplace_back(i - static_cast<std::size_t>(r + 1), a);
      zf[i] = Rational(a);
    }
    // Membership check of z^{r+1} * f against J, independently of the echelon.
    if (!in_column_span(span_j, zf))
      throw Error(ErrorKind::RouteDisagreement, "colon basis vector not in J");
    out.push_back(std::move(f));
  }
  return out;
}

/// In(J : z^{r+1}) computed directly from the colon's graded pieces.
inline MonomialIdeal colon_initial_oracle(int r, const std::vector<Rational>& slopes, int d_max, Var v = Var::X) {
  detail::check_slopes(slopes);
  std::vector<Monomial> gens;
  for (int e = 0; e <= d_max; ++e) {
    auto basis = colon_degree_basis(r, slopes, e);
    std::vector<Monomial> leads;
    for (const auto& f : basis) leads.push_back(detail::two_var(v, e - static_cast<int>(f.front().first), static_cast<int>(f.front().first)));
    detail::accumulate(gens, leads);
    if (basis.size() == static_cast<std::size_t>(e + 1)) break;
  }
  return MonomialIdeal(std::move(gens));
}

/// In(Q(v1) + Q(v2)) of the (non-monomial) sum of the two colon ideals, with
/// Q(v1) in (x, z) and Q(v2) in (y, z), computed degree by degree in k[x,y,z].
inline MonomialIdeal sum_initial_oracle(int r, const std::vector<Rational>& slopes1,
                                        const std::vector<Rational>& slopes2, int d_max) {
  detail::check_slopes(slopes1);
  detail::check_slopes(slopes2);
  std::vector<std::vector<SparseVec>> q1, q2;  // indexed by degree e
  std::vector<Monomial> gens;
  for (int d = 0; d <= d_max; ++d) {
    q1.push_back(colon_degree_basis(r, slopes1, d));
    q2.push_back(colon_degree_basis(r, slopes2, d));
    IntegerEchelon ech(static_cast<std::size_t>(monomial_count(d)));
    // Q(v_i) is extended from a two-variable ideal, so its degree-d part is
    // spanned by f * w^{d-e} with f in Q(v_i)_e and w the missing variable.
    for (int e = 0; e <= d && !ech.full(); ++e) {
      for (const auto& f : q1[static_cast<std::size_t>(e)]) {
        SparseVec g;
        for (const auto& [j, c] : f) g.emplace_back(lex_index({e - static_cast<int>(j), d - e, static_cast<int>(j)}), c);
        std::sort(g.begin(), g.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        ech.insert(std::move(g));
      }
      for (const auto& h : q2[static_cast<std::size_t>(e)]) {
        SparseVec g;
        for (const auto& [j, c] : h) g.emplace_back(lex_index({d - e, e - static_cast<int>(j), static_cast<int>(j)}), c);
        std::sort(g.begin(), g.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        ech.insert(std::move(g));
      }
    }
    const auto all = monomials_of_degree(d);
    std::vector<Monomial> leads;
    for (auto idx : ech.leads()) leads.push_back(all[idx]);
    detail::accumulate(gens, leads);
    if (ech.full()) break;
  }
  return MonomialIdeal(std::move(gens));
}

}  // namespace splinereg
