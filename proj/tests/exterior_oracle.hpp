#pragma once

// Test-only oracle: the induced action of a matrix on the k-th exterior power,
// built from k x k minors, and the dimension of its fixed subspace via an
// exact rank computation. Independent of the binomial formulas under test.

#include <vector>

#include "cocyclelab/rational_linalg.hpp"

namespace cocyclelab::testing {

inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline Rational det(RatMat a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return d;
}

inline RatMat wedge_matrix(const RatMat& m, int k) {
  const int n = static_cast<int>(m.size());
  const auto subsets = k_subsets(n, k);
  RatMat w(subsets.size(), RatVec(subsets.size(), 0));
  for (std::size_t r = 0; r < subsets.size(); ++r)
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      RatMat minor(k, RatVec(k, 0));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor[i][j] = m[subsets[r][i]][subsets[c][j]];
      w[r][c] = det(minor);
    }
  return w;
}

/// dim ker(wedge^k(m) - id) computed exactly.
inline std::int64_t fixed_dim(const RatMat& m, int k) {
  if (k == 0) return 1;
  RatMat w = wedge_matrix(m, k);
  for (std::size_t i = 0; i < w.size(); ++i) w[i][i] -= 1;
  return static_cast<std::int64_t>(w.size() - matrix_rank(w));
}

}  // namespace cocyclelab::testing
