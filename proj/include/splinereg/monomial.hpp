#pragma once

// Monomials and monomial ideals in k[x, y, z], lex order x > y > z.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "splinereg/error.hpp"

namespace splinereg {

enum class Var { X = 0, Y = 1, Z = 2 };

struct Monomial {
  int ex = 0;
  int ey = 0;
  int ez = 0;

  static Monomial pure(Var v, int e) {
    Monomial m;
    m.exp(v) = e;
    return m;
  }

  int degree() const { return ex + ey + ez; }
  int& exp(Var v) { return v == Var::X ? ex : v == Var::Y ? ey : ez; }
  int exp(Var v) const { return v == Var::X ? ex : v == Var::Y ? ey : ez; }

  bool divides(const Monomial& m) const { return ex <= m.ex && ey <= m.ey && ez <= m.ez; }

  Monomial operator*(const Monomial& m) const { return {ex + m.ex, ey + m.ey, ez + m.ez}; }

  // Lexicographic on (ex, ey, ez), i.e. the lex monomial order.
  auto operator<=>(const Monomial&) const = default;
};

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  return {std::max(a.ex, b.ex), std::max(a.ey, b.ey), std::max(a.ez, b.ez)};
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  return {std::min(a.ex, b.ex), std::min(a.ey, b.ey), std::min(a.ez, b.ez)};
}

/// g / gcd(g, m): componentwise truncated subtraction.
inline Monomial mono_quotient(const Monomial& g, const Monomial& m) {
  return {std::max(0, g.ex - m.ex), std::max(0, g.ey - m.ey), std::max(0, g.ez - m.ez)};
}

/// "x^4 y^3 z", exponent-one factors written bare, unit monomial as "1".
inline std::string to_string(const Monomial& m) {
  std::string out;
  auto put = [&out](char name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  };
  put('x', m.ex);
  put('y', m.ey);
  put('z', m.ez);
  return out.empty() ? "1" : out;
}

/// All monomials of degree d in lex-descending order (x^d first, z^d last).
inline std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

/// Position of m in monomials_of_degree(m.degree()).
inline std::size_t lex_index(const Monomial& m) {
  const int d = m.degree();
  // Monomials with larger x-exponent come first: sum_{a > ex} (d - a + 1).
  const int k = d - m.ex;
  return static_cast<std::size_t>(k * (k + 1) / 2 + (d - m.ex - m.ey));
}

/// C(n, 2) clamped to zero for n < 2: the number of monomials of degree n-2.
inline long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

inline long long monomial_count(int d) { return choose2(static_cast<long long>(d) + 2); }

/// A monomial ideal stored by its minimal generators, lex-descending.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::initializer_list<Monomial> ms) : MonomialIdeal(std::vector<Monomial>(ms)) {}

  /// Keeps only the divisibility-minimal elements.
  explicit MonomialIdeal(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    // After sorting by total degree no later element divides an earlier one.
    std::stable_sort(ms.begin(), ms.end(),
                     [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    for (const auto& m : ms) {
      bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
      if (!redundant) gens_.push_back(m);
    }
    std::sort(gens_.begin(), gens_.end(), std::greater<>());
  }

  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  bool is_unit() const { return gens_.size() == 1 && gens_.front().degree() == 0; }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<Monomial> gens_;
};

inline std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "<";
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.gens()[i]);
  }
  return out + ">";
}

inline MonomialIdeal minimalize(std::vector<Monomial> ms) { return MonomialIdeal(std::move(ms)); }

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> all = a.gens();
  all.insert(all.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(std::move(all));
}

inline MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens()) out.push_back(mono_quotient(g, m));
  return MonomialIdeal(std::move(out));
}

/// dim_k (S/I)_d.
inline long long hilbert_function(const MonomialIdeal& ideal, int d) {
  if (d < 0) return 0;
  long long count = 0;
  for (const auto& m : monomials_of_degree(d))
    if (!ideal.contains(m)) ++count;
  return count;
}

inline bool is_artinian(const MonomialIdeal& ideal) {
  bool has[3] = {false, false, false};
  for (const auto& g : ideal.gens()) {
    if (g.ey == 0 && g.ez == 0) has[0] = true;
    if (g.ex == 0 && g.ez == 0) has[1] = true;
    if (g.ex == 0 && g.ey == 0) has[2] = true;
  }
  return has[0] && has[1] && has[2];
}

/// Top degree in which S/I is nonzero. Requires S/I of finite length and I != S.
inline int max_socle_degree(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) throw Error(ErrorKind::NotArtinian, "S/I has infinite length for " + to_string(ideal));
  if (ideal.is_unit()) throw Error(ErrorKind::TrivialIdeal, "S/I is zero");
  // x^p, y^q, z^t in I kill every monomial of degree >= p + q + t - 2.
  int bound = 0;
  for (Var v : {Var::X, Var::Y, Var::Z}) {
    int best = -1;
    for (const auto& g : ideal.gens())
      if (g.degree() == g.exp(v) && (best < 0 || g.exp(v) < best)) best = g.exp(v);
    bound += best;
  }
  for (int d = bound; d >= 0; --d)
    if (hilbert_function(ideal, d) != 0) return d;
  throw Error(ErrorKind::TrivialIdeal, "S/I is zero");
}

}  // namespace splinereg
