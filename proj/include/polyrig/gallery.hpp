#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "polyrig/polytope.hpp"

namespace polyrig {

// ---------------------------------------------------------------------------
// crosspolytope / hypercube: the l1 and l-infinity balls

template <class S>
Polytope<S> crosspolytope(int d) {
  std::vector<Vec<S>> vertices;
  for (int k = 0; k < d; ++k) {
    for (int s : {1, -1}) {
      Vec<S> v(d, S(0));
      v[k] = S(s);
      vertices.push_back(std::move(v));
    }
  }
  if (d <= 3) return Polytope<S>::validate(std::move(vertices), d);
  // facets are indexed by sign vectors
  std::vector<Vec<S>> polar;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vec<S> y(d, S(0));
    for (int k = 0; k < d; ++k) y[k] = (mask >> k) & 1 ? S(-1) : S(1);
    polar.push_back(std::move(y));
  }
  return Polytope<S>::validate(std::move(vertices), d, std::move(polar));
}

template <class S>
Polytope<S> hypercube(int d) {
  std::vector<Vec<S>> vertices;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vec<S> v(d, S(0));
    for (int k = 0; k < d; ++k) v[k] = (mask >> k) & 1 ? S(-1) : S(1);
    vertices.push_back(std::move(v));
  }
  if (d <= 3) return Polytope<S>::validate(std::move(vertices), d);
  std::vector<Vec<S>> polar;
  for (int k = 0; k < d; ++k) {
    for (int s : {1, -1}) {
      Vec<S> y(d, S(0));
      y[k] = S(s);
      polar.push_back(std::move(y));
    }
  }
  return Polytope<S>::validate(std::move(vertices), d, std::move(polar));
}

// ---------------------------------------------------------------------------
// regular even n-gon with vertices on the unit circle (float backend)

inline Polytope<double> ngon(int n, double tolerance = 1e-9) {
  if (n < 4 || n % 2 != 0) fail(Errc::OddN, "ngon needs an even vertex count >= 4");
  std::vector<Vec<double>> vertices;
  for (int k = 0; k < n / 2; ++k) {
    double a = 2.0 * std::numbers::pi * k / n;
    vertices.push_back({std::cos(a), std::sin(a)});
  }
  // exact antipodes keep the symmetry check trivially satisfied
  for (int k = 0; k < n / 2; ++k) vertices.push_back(negated(vertices[k]));
  return Polytope<double>::validate(std::move(vertices), 2, std::nullopt, tolerance);
}

// ---------------------------------------------------------------------------
// additive norms: ||x|| = sum_b |x . b|

// Builds the unit ball from its polar: the polar body of an additive or
// Lovasz norm is generated as a point set first, and the ball's vertices
// are the facet functionals of that polar polytope.
template <class S>
Polytope<S> ball_from_polar_points(const std::vector<Vec<S>>& candidates, int d, const S& tol) {
  if (d > 3)
    fail(Errc::DimensionUnsupported, "polar-generated balls are implemented for d <= 3");
  std::vector<Vec<S>> ext = extreme_points(candidates, d, tol);
  Polytope<S> polar = Polytope<S>::validate(std::move(ext), d, std::nullopt, tol);
  std::vector<Vec<S>> ball_vertices;
  for (const auto& fc : polar.classes()) {
    ball_vertices.push_back(fc.fhat);
    ball_vertices.push_back(negated(fc.fhat));
  }
  return Polytope<S>::validate(std::move(ball_vertices), d, polar.vertices(), tol);
}

template <class S>
Polytope<S> additive_norm(const std::vector<Vec<S>>& base,
                          S tol = Polytope<S>::default_tolerance()) {
  if (base.empty()) fail(Errc::DegenerateB, "additive norm needs a nonempty base set");
  const int d = static_cast<int>(base[0].size());
  for (const auto& b : base) {
    if (static_cast<int>(b.size()) != d)
      fail(Errc::DegenerateB, "additive base vectors must share one dimension");
  }
  if (matrix_rank(base, S(tol * std::max<S>(S(1), matrix_max_abs(base)))) < d)
    fail(Errc::DegenerateB, "additive base does not span R^d");
  // the polar body is the zonotope sum of the segments [-b, b]; its
  // vertices are among the 2^m signed sums
  const int m = static_cast<int>(base.size());
  if (m > 20) fail(Errc::DegenerateB, "additive base too large");
  std::vector<Vec<S>> sums;
  for (int mask = 0; mask < (1 << m); ++mask) {
    Vec<S> y(d, S(0));
    for (int i = 0; i < m; ++i) {
      Vec<S> t = (mask >> i) & 1 ? negated(base[i]) : base[i];
      y = add(y, t);
    }
    sums.push_back(std::move(y));
  }
  return ball_from_polar_points(sums, d, tol);
}

template <class S>
S additive_gauge(const std::vector<Vec<S>>& base, const Vec<S>& x) {
  S acc(0);
  for (const auto& b : base) acc += abs_value(dot(b, x));
  return acc;
}

// ---------------------------------------------------------------------------
// Lovasz / submodular norms

// Set function on subsets of {1..d} with f(empty) = 0, f({j}) > 0,
// monotone and submodular; all properties checked exhaustively (d <= 8).
template <class S>
struct SubmodularFn {
  int ground_size = 0;
  std::vector<S> values;  // indexed by subset bitmask

  const S& of(unsigned mask) const { return values[mask]; }

  static SubmodularFn validate(int d, std::vector<S> values) {
    if (d < 1 || d > 8) fail(Errc::DimensionUnsupported, "submodular ground set capped at 8");
    if (static_cast<int>(values.size()) != (1 << d))
      fail(Errc::ValidationError, "submodular table needs one value per subset");
    if (values[0] != S(0)) fail(Errc::ValidationError, "f(empty set) must be 0");
    for (int j = 0; j < d; ++j) {
      if (values[1u << j] <= S(0)) fail(Errc::ValidationError, "f of a singleton must be > 0");
    }
    const unsigned full = 1u << d;
    for (unsigned a = 0; a < full; ++a) {
      for (int x = 0; x < d; ++x) {
        if (a & (1u << x)) continue;
        if (values[a | (1u << x)] < values[a])
          fail(Errc::NotMonotone, "f decreases when adding an element");
        for (int y = x + 1; y < d; ++y) {
          if (a & (1u << y)) continue;
          // local submodularity: f(A+x) + f(A+y) >= f(A+x+y) + f(A)
          if (values[a | (1u << x)] + values[a | (1u << y)] <
              values[a | (1u << x) | (1u << y)] + values[a])
            fail(Errc::NotSubmodular, "f violates submodularity");
        }
      }
    }
    return SubmodularFn{d, std::move(values)};
  }
};

// direct evaluation of the Lovasz extension at |x|
template <class S>
S lovasz_gauge(const SubmodularFn<S>& f, const Vec<S>& x) {
  const int d = f.ground_size;
  std::vector<std::pair<S, int>> mag;
  for (int j = 0; j < d; ++j) mag.emplace_back(abs_value(x[j]), j);
  std::stable_sort(mag.begin(), mag.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  S acc(0);
  unsigned mask = 0;
  for (int k = 0; k < d; ++k) {
    unsigned next = mask | (1u << mag[k].second);
    acc += mag[k].first * (f.of(next) - f.of(mask));
    mask = next;
  }
  return acc;
}

// Polar extreme points are the signed permutation-difference vectors:
// for an ordering j_1..j_d and signs s, the vector with s_{j_k} *
// (f(A_k) - f(A_{k-1})) in coordinate j_k.
template <class S>
Polytope<S> lovasz_norm(const SubmodularFn<S>& f, S tol = Polytope<S>::default_tolerance()) {
  const int d = f.ground_size;
  std::vector<int> perm(d);
  for (int j = 0; j < d; ++j) perm[j] = j;
  std::vector<Vec<S>> candidates;
  do {
    Vec<S> delta(d, S(0));
    unsigned mask = 0;
    for (int k = 0; k < d; ++k) {
      unsigned next = mask | (1u << perm[k]);
      delta[perm[k]] = f.of(next) - f.of(mask);
      mask = next;
    }
    for (int smask = 0; smask < (1 << d); ++smask) {
      Vec<S> y(delta);
      for (int j = 0; j < d; ++j)
        if ((smask >> j) & 1) y[j] = -y[j];
      candidates.push_back(std::move(y));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ball_from_polar_points(candidates, d, tol);
}

}  // namespace polyrig
