#pragma once

#include <vector>

#include "polyrig/linalg.hpp"

namespace polyrig {

namespace detail {

template <class S>
bool barycentric_inside(const Vec<S>& x, const std::vector<Vec<S>>& pts,
                        const std::vector<int>& idx, int dim, const S& tol) {
  const int k = static_cast<int>(idx.size());
  // rows: d coordinate equations plus the sum-to-one constraint
  std::vector<Vec<S>> aug(dim + 1, Vec<S>(k + 1, S(0)));
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < dim; ++r) aug[r][c] = pts[idx[c]][r];
    aug[dim][c] = S(1);
  }
  for (int r = 0; r < dim; ++r) aug[r][k] = x[r];
  aug[dim][k] = S(1);
  const S thresh = tol * std::max<S>(S(1), matrix_max_abs(aug));
  Rref<S> rr = rref(aug, thresh);
  for (int c : rr.pivot_cols)
    if (c == k) return false;  // inconsistent
  if (rr.rank < k) return false;  // affinely dependent subset; skipped
  Vec<S> lambda(k, S(0));
  for (int i = 0; i < rr.rank; ++i) lambda[rr.pivot_cols[i]] = rr.mat[i][k];
  for (const auto& l : lambda)
    if (l < -tol) return false;
  return true;
}

}  // namespace detail

// Caratheodory membership: x lies in conv(pts) iff it is a convex
// combination of at most d+1 affinely independent points of pts.
template <class S>
bool point_in_hull(const Vec<S>& x, const std::vector<Vec<S>>& pts, int dim, const S& tol) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx;
  for (int k = 1; k <= dim + 1 && k <= n; ++k) {
    idx.assign(k, 0);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (detail::barycentric_inside(x, pts, idx, dim, tol)) return true;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

// Extreme points of the given set: deduplicates, then drops every point
// contained in the hull of the others.
template <class S>
std::vector<Vec<S>> extreme_points(const std::vector<Vec<S>>& pts, int dim, const S& tol) {
  std::vector<Vec<S>> unique;
  const S eq_tol = tol * std::max<S>(S(1), matrix_max_abs(pts));
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& u : unique) {
      bool same = true;
      for (int k = 0; k < dim; ++k)
        if (abs_value(S(p[k] - u[k])) > eq_tol) { same = false; break; }
      if (same) { dup = true; break; }
    }
    if (!dup) unique.push_back(p);
  }
  std::vector<Vec<S>> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<Vec<S>> others;
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.push_back(unique[j]);
    if (!point_in_hull(unique[i], others, dim, tol)) out.push_back(unique[i]);
  }
  return out;
}

}  // namespace polyrig
