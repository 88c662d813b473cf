#pragma once

// Small dense linear algebra over exact rationals. Everything here is sized
// by the rank of a root system (at most a few dozen), so no effort is spent
// on pivot-growth heuristics or sparsity.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "cocyclelab/errors.hpp"

namespace cocyclelab {

using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("dot: vector sizes differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline RatVec negate(const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

inline RatMat identity_matrix(std::size_t n) {
  RatMat m(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat r(n, RatVec(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw DimensionMismatch("mat_mul: shapes differ");
    for (std::size_t j = 0; j < m; ++j) {
      Rational s = 0;
      for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      r[i][j] = s;
    }
  }
  return r;
}

inline bool is_identity(const RatMat& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
  return true;
}

inline Rational trace(const RatMat& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

/// Invert a square rational matrix by Gauss-Jordan elimination.
inline RatMat invert(const RatMat& m) {
  const std::size_t n = m.size();
  RatMat a = m;
  RatMat inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("invert: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Rank of a rational matrix (row echelon form, exact).
inline std::size_t matrix_rank(RatMat a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j) a[row][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Lexicographic comparison, used for the canonical root ordering.
inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace cocyclelab
