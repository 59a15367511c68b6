#pragma once

// Exact rank computations over the rationals.
//
// Everything funnels through IntegerEchelon: vectors are scaled to primitive
// integer vectors and reduced fraction-free (a*v - b*w with a, b cofactors of
// the two pivots, then the content is divided out). No floating point.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "splinereg/error.hpp"
#include "splinereg/rational.hpp"

namespace splinereg {

/// Sparse integer vector: (index, value) pairs, strictly increasing index,
/// no stored zeros.
using SparseVec = std::vector<std::pair<std::size_t, Integer>>;

namespace detail {

inline void make_primitive(SparseVec& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& [i, a] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  if (v.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// v <- p*v - q*w, merging by index.
inline SparseVec combine(const Integer& p, const SparseVec& v, const Integer& q, const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.emplace_back(v[i].first, p == 1 ? v[i].second : Integer(p * v[i].second));
      ++i;
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, Integer(-q * w[j].second));
      ++j;
    } else {
      t = p * v[i].second - q * w[j].second;
      if (t != 0) out.emplace_back(v[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Incremental row echelon form keyed by leading index.
///
/// Each stored vector has a distinct leading (first nonzero) index. Inserting
/// in a fixed order makes the result deterministic, and the set of leading
/// indices of the stored basis is exactly the set of leading positions of the
/// spanned space.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t dim) : dim_(dim), basis_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  bool full() const { return rank_ == dim_; }

  /// Reduces v against the basis; returns the (primitive) remainder.
  SparseVec reduce(SparseVec v) const {
    detail::make_primitive(v);
    while (!v.empty()) {
      const auto& lead = basis_[v.front().first];
      if (!lead) break;
      const Integer& p = lead->front().second;
      const Integer& q = v.front().second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      v = detail::combine(Integer(p / g), v, Integer(q / g), *lead);
      detail::make_primitive(v);
    }
    return v;
  }

  /// Returns true (and stores the remainder) iff v is independent of the basis.
  bool insert(SparseVec v) {
    SparseVec rem = reduce(std::move(v));
    if (rem.empty()) return false;
    std::size_t lead = rem.front().first;
    basis_[lead] = std::move(rem);
    ++rank_;
    return true;
  }

  bool in_span(SparseVec v) const { return reduce(std::move(v)).empty(); }

  /// Leading indices of the stored basis, ascending.
  std::vector<std::size_t> leads() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_; ++i)
      if (basis_[i]) out.push_back(i);
    return out;
  }

  /// Basis vector whose leading index is `lead`, if any.
  const std::optional<SparseVec>& at_lead(std::size_t lead) const { return basis_[lead]; }

 private:
  std::size_t dim_;
  std::vector<std::optional<SparseVec>> basis_;
  std::size_t rank_ = 0;
};

/// Clears denominators: returns the primitive integer vector proportional to v.
inline SparseVec to_integer_vector(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v)
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer n = v[i].get_num() * (l / v[i].get_den());
    out.emplace_back(i, std::move(n));
  }
  detail::make_primitive(out);
  return out;
}

inline SparseVec to_sparse(std::span<const Integer> v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

/// Dense rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static RatMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw Error(ErrorKind::InvalidArgument, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(entries_).subspan(i * cols_, cols_);
  }

  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline std::size_t rank(const RatMatrix& m) {
  // Eliminate along the shorter side; rank is the same either way.
  if (m.rows() > m.cols()) return rank(m.transpose());
  IntegerEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows() && !ech.full(); ++i) ech.insert(to_integer_vector(m.row(i)));
  return ech.rank();
}

/// Rows that raise the rank when the rows are taken top to bottom. With rows
/// indexed by monomials in decreasing order and columns spanning a space of
/// polynomials, these are the leading monomials of that space.
inline std::vector<std::size_t> pivot_rows(const RatMatrix& m) {
  std::vector<std::size_t> out;
  IntegerEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows() && !ech.full(); ++i)
    if (ech.insert(to_integer_vector(m.row(i)))) out.push_back(i);
  return out;
}

inline bool in_column_span(const RatMatrix& basis, std::span<const Rational> v) {
  if (v.size() != basis.rows()) throw Error(ErrorKind::InvalidArgument, "vector length != basis rows");
  IntegerEchelon ech(basis.rows());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    auto col = basis.column(j);
    ech.insert(to_integer_vector(col));
  }
  return ech.in_span(to_integer_vector(v));
}

}  // namespace splinereg
