#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include "polyrig/vec.hpp"

namespace polyrig {

template <class S>
struct Rref {
  std::vector<Vec<S>> mat;
  std::vector<int> pivot_cols;  // one entry per pivot row, ascending
  int rank = 0;
  int cols = 0;
};

template <class S>
inline S matrix_max_abs(const std::vector<Vec<S>>& m) {
  S v(0);
  for (const auto& row : m) v = std::max<S>(v, max_abs(row));
  return v;
}

// Gauss-Jordan reduction. The rational backend passes zero_thresh = 0 and is
// exact; the double backend uses partial pivoting with pivots of magnitude
// <= zero_thresh treated as zero.
template <class S>
inline Rref<S> rref(std::vector<Vec<S>> m, const S& zero_thresh) {
  Rref<S> out;
  out.cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  const int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < out.cols && r < rows; ++c) {
    int p = -1;
    if constexpr (std::is_same_v<S, double>) {
      S best(0);
      for (int i = r; i < rows; ++i) {
        S a = abs_value(m[i][c]);
        if (a > best) { best = a; p = i; }
      }
      if (p >= 0 && best <= zero_thresh) p = -1;
    } else {
      for (int i = r; i < rows; ++i) {
        if (m[i][c] != S(0)) { p = i; break; }
      }
    }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    S piv = m[r][c];
    for (int j = c; j < out.cols; ++j) m[r][j] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      S f = m[i][c];
      if (f == S(0)) continue;
      for (int j = c; j < out.cols; ++j) m[i][j] -= f * m[r][j];
      m[i][c] = S(0);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

template <class S>
inline int matrix_rank(const std::vector<Vec<S>>& m, const S& zero_thresh) {
  return rref(m, zero_thresh).rank;
}

// Kernel basis in reduced-echelon parametrization: one vector per free
// column, ordered by free column index.
template <class S>
inline std::vector<Vec<S>> kernel_basis(const Rref<S>& r) {
  std::vector<bool> is_pivot(r.cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec<S>> basis;
  for (int f = 0; f < r.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v(r.cols, S(0));
    v[f] = S(1);
    for (int i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.mat[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Basis of the span of the given vectors (nonzero rows of the RREF).
template <class S>
inline std::vector<Vec<S>> span_basis(const std::vector<Vec<S>>& vectors, const S& zero_thresh) {
  Rref<S> r = rref(vectors, zero_thresh);
  std::vector<Vec<S>> out;
  for (int i = 0; i < r.rank; ++i) out.push_back(r.mat[i]);
  return out;
}

// Functionals annihilating the span of the given vectors.
template <class S>
inline std::vector<Vec<S>> annihilator(const std::vector<Vec<S>>& vectors, int dim,
                                       const S& zero_thresh) {
  if (vectors.empty()) {
    std::vector<Vec<S>> full;
    for (int i = 0; i < dim; ++i) {
      Vec<S> e(dim, S(0));
      e[i] = S(1);
      full.push_back(std::move(e));
    }
    return full;
  }
  return kernel_basis(rref(vectors, zero_thresh));
}

}  // namespace polyrig
