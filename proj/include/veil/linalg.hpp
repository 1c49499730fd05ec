// veil/linalg.hpp — dense exact linear algebra over the rationals: reduced
// row echelon form, one-solution solve, and nullspace bases.  Sizes here are
// tiny (tens of rows), so simple Gauss-Jordan with exact pivots is the right
// tool; no pivoting strategy beyond "first nonzero" is needed for exact
// arithmetic.
//
// Copyright (c) 2026 The veil authors.  MIT License; see LICENSE.

#pragma once

#include <veil/rational.hpp>

#include <optional>
#include <vector>

namespace veil {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major; all rows same length

/// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// One exact solution of A x = b, or nullopt if inconsistent.  Free
/// variables are set to zero.
inline std::optional<Vec> linsolve(Mat a, const Vec& b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  // inconsistent iff a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

/// Basis of the nullspace of A (columns = unknowns).
inline std::vector<Vec> nullspace(Mat a) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rat(0));
    v[f] = Rat(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace veil
