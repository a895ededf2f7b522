#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyrig/errors.hpp"
#include "polyrig/hull.hpp"
#include "polyrig/linalg.hpp"
#include "polyrig/vec.hpp"

namespace polyrig {

enum class ConeMembership { InteriorPositive, InteriorNegative, Boundary, Outside };

inline const char* membership_name(ConeMembership m) {
  switch (m) {
    case ConeMembership::InteriorPositive: return "interior+";
    case ConeMembership::InteriorNegative: return "interior-";
    case ConeMembership::Boundary: return "boundary";
    case ConeMembership::Outside: return "outside";
  }
  return "?";
}

// A +/- pair of facets, carried by the polar extreme point of the
// representative facet. The representative has its first nonzero
// coordinate positive.
template <class S>
struct FacetClass {
  Vec<S> fhat;
  std::vector<int> members;  // polytope vertex indices on the representative facet
};

// Convex symmetric full-dimensional polytope, the unit ball of the norm.
// Facet enumeration is native for d = 2 and d = 3 (supporting-hyperplane
// scan); d >= 4 requires the polar extreme points up front.
template <class S>
class Polytope {
 public:
  using ScalarType = S;

  static Polytope validate(std::vector<Vec<S>> vertices, int dim,
                           std::optional<std::vector<Vec<S>>> polar_override = std::nullopt,
                           S tolerance = default_tolerance()) {
    Polytope p;
    p.dim_ = dim;
    p.tol_ = tolerance;
    p.vertices_ = std::move(vertices);
    p.check_basic();
    bool from_polar = polar_override.has_value();
    if (from_polar) {
      p.pending_ = std::move(*polar_override);
      for (const auto& y : p.pending_) {
        if (static_cast<int>(y.size()) != dim)
          fail(Errc::ValidationError, "polar point arity does not match dim");
      }
      if (p.pending_.empty()) fail(Errc::ValidationError, "empty polar_override");
    } else if (dim == 2 || dim == 3) {
      p.enumerate_facets_scan();
    } else {
      fail(Errc::DimensionUnsupported,
           "native facet enumeration covers d=2,3 only; supply polar_override for d=" +
               std::to_string(dim));
    }
    p.finalize_classes(from_polar);
    p.check_extreme();
    return p;
  }

  static S default_tolerance() {
    if constexpr (std::is_same_v<S, double>) return 1e-9;
    else return S(0);
  }

  int dim() const { return dim_; }
  const S& tol() const { return tol_; }
  const std::vector<Vec<S>>& vertices() const { return vertices_; }
  const std::vector<FacetClass<S>>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }

  // gauge norm: max of x . y over the polar extreme points +/- fhat
  S gauge(const Vec<S>& x) const {
    S best(0);
    for (const auto& fc : classes_) best = std::max<S>(best, abs_value(dot(fc.fhat, x)));
    return best;
  }

  bool attains(int class_idx, const Vec<S>& x, const S& norm) const {
    S t = dot(classes_[class_idx].fhat, x);
    return nearly_equal(abs_value(t), norm, tol_, norm);
  }

  ConeMembership membership(int class_idx, const Vec<S>& x) const {
    if (is_zero_vec(x)) fail(Errc::ZeroVector, "cone membership of the zero vector");
    S norm = gauge(x);
    if (!attains(class_idx, x, norm)) return ConeMembership::Outside;
    for (int j = 0; j < class_count(); ++j) {
      if (j != class_idx && attains(j, x, norm)) return ConeMembership::Boundary;
    }
    return dot(classes_[class_idx].fhat, x) > S(0) ? ConeMembership::InteriorPositive
                                                   : ConeMembership::InteriorNegative;
  }

  // all classes whose membership verdict for x is not Outside
  std::vector<int> support_classes(const Vec<S>& x) const {
    if (is_zero_vec(x)) fail(Errc::ZeroVector, "support classes of the zero vector");
    S norm = gauge(x);
    std::vector<int> out;
    for (int i = 0; i < class_count(); ++i)
      if (attains(i, x, norm)) out.push_back(i);
    return out;
  }

  std::vector<std::pair<int, ConeMembership>> support_with_membership(const Vec<S>& x) const {
    std::vector<int> sup = support_classes(x);
    std::vector<std::pair<int, ConeMembership>> out;
    for (int i : sup) {
      ConeMembership m;
      if (sup.size() > 1) {
        m = ConeMembership::Boundary;
      } else {
        m = dot(classes_[i].fhat, x) > S(0) ? ConeMembership::InteriorPositive
                                            : ConeMembership::InteriorNegative;
      }
      out.emplace_back(i, m);
    }
    return out;
  }

  // A direction strictly interior to cone(F) of the representative facet:
  // the sum of the facet's vertices.
  Vec<S> interior_direction(int class_idx) const {
    const auto& fc = classes_[class_idx];
    Vec<S> dir(dim_, S(0));
    for (int m : fc.members) dir = add(dir, vertices_[m]);
    return dir;
  }

  Vec<S> facet_vertex(int class_idx, int k) const {
    return vertices_[classes_[class_idx].members[k]];
  }

  std::string class_name(int class_idx) const { return "F" + std::to_string(class_idx + 1); }

 private:
  Polytope() = default;

  S coord_scale() const {
    S coord(0);
    for (const auto& v : vertices_) coord = std::max<S>(coord, max_abs(v));
    return coord;
  }

  // threshold for side classifications during facet scans
  S scan_thresh() const {
    S c = coord_scale();
    return tol_ * std::max<S>(S(1), c * c);
  }

  S rank_thresh() const { return tol_ * std::max<S>(S(1), coord_scale()); }

  bool points_equal(const Vec<S>& a, const Vec<S>& b, const S& eq_tol) const {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (abs_value(S(a[k] - b[k])) > eq_tol) return false;
    return true;
  }

  void check_basic() {
    if (dim_ < 2) fail(Errc::DimensionUnsupported, "polytope dimension must be >= 2");
    if (vertices_.empty()) fail(Errc::ValidationError, "empty vertex list");
    for (const auto& v : vertices_) {
      if (static_cast<int>(v.size()) != dim_)
        fail(Errc::ValidationError, "vertex arity does not match dim");
    }
    const S eq_tol = tol_ * std::max<S>(S(1), coord_scale());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
        if (points_equal(vertices_[i], vertices_[j], eq_tol))
          fail(Errc::NonExtremePoint, "duplicate vertex " + vec_to_string(vertices_[j]));
      }
    }
    if (dim_ <= 3) {
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        std::vector<Vec<S>> others;
        for (std::size_t j = 0; j < vertices_.size(); ++j)
          if (j != i) others.push_back(vertices_[j]);
        if (point_in_hull(vertices_[i], others, dim_, tol_))
          fail(Errc::NonExtremePoint, vec_to_string(vertices_[i]));
      }
    }
    for (const auto& v : vertices_) {
      bool found = false;
      for (const auto& w : vertices_) {
        if (points_equal(negated(v), w, eq_tol)) { found = true; break; }
      }
      if (!found) fail(Errc::NotSymmetric, "missing antipode of " + vec_to_string(v));
    }
    if (matrix_rank(vertices_, rank_thresh()) < dim_)
      fail(Errc::NotFullDimensional, "vertex set does not span R^d");
  }

  // Supporting-hyperplane candidate: normal direction from a vertex pair
  // (d=2) or triple (d=3). The plane at the max offset in that direction is
  // registered when at least d vertices attain the max.
  void try_register_facet(Vec<S> normal) {
    const S thresh = scan_thresh();
    if (max_abs(normal) <= thresh) return;
    S hi = dot(normal, vertices_[0]);
    for (const auto& v : vertices_) hi = std::max<S>(hi, dot(normal, v));
    if (hi <= thresh) return;  // origin would sit on the plane
    int attaining = 0;
    for (const auto& v : vertices_)
      if (hi - dot(normal, v) <= thresh) ++attaining;
    if (attaining < dim_) return;
    pending_.push_back(scaled(normal, S(S(1) / hi)));
  }

  void enumerate_facets_scan() {
    const std::size_t n = vertices_.size();
    if (dim_ == 2) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          Vec<S> e = sub(vertices_[j], vertices_[i]);
          try_register_facet(Vec<S>{-e[1], e[0]});
          try_register_facet(Vec<S>{e[1], -e[0]});
        }
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          for (std::size_t k = j + 1; k < n; ++k) {
            Vec<S> a = sub(vertices_[j], vertices_[i]);
            Vec<S> b = sub(vertices_[k], vertices_[i]);
            Vec<S> normal{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                          a[0] * b[1] - a[1] * b[0]};
            try_register_facet(normal);
            try_register_facet(negated(normal));
          }
        }
      }
    }
    if (pending_.empty()) fail(Errc::DegenerateFacet, "no supporting facet found");
  }

  static void canonicalize(Vec<S>& fhat) {
    for (const auto& c : fhat) {
      if (c == S(0)) continue;
      if (c < S(0)) fhat = negated(fhat);
      return;
    }
  }

  void finalize_classes(bool from_polar) {
    const S thresh = scan_thresh();
    std::vector<Vec<S>> unique;
    for (auto& f : pending_) {
      canonicalize(f);
      bool dup = false;
      S fscale = std::max<S>(S(1), max_abs(f));
      for (const auto& u : unique) {
        if (points_equal(u, f, tol_ * fscale)) { dup = true; break; }
      }
      if (!dup) unique.push_back(f);
    }
    pending_.clear();
    std::sort(unique.begin(), unique.end(),
              [](const Vec<S>& a, const Vec<S>& b) { return lex_less(b, a); });

    classes_.clear();
    for (auto& fhat : unique) {
      FacetClass<S> fc;
      fc.fhat = std::move(fhat);
      for (std::size_t m = 0; m < vertices_.size(); ++m) {
        S s = dot(fc.fhat, vertices_[m]);
        if (s > S(1) + tol_)
          fail(Errc::ValidationError, "vertex " + vec_to_string(vertices_[m]) +
                                          " violates the halfspace of polar point " +
                                          vec_to_string(fc.fhat));
        if (nearly_equal(s, S(1), tol_, S(1))) fc.members.push_back(static_cast<int>(m));
      }
      bool facet_ok = static_cast<int>(fc.members.size()) >= dim_;
      if (facet_ok) {
        std::vector<Vec<S>> rel;
        for (std::size_t t = 1; t < fc.members.size(); ++t)
          rel.push_back(sub(vertices_[fc.members[t]], vertices_[fc.members[0]]));
        facet_ok = matrix_rank(rel, thresh) == dim_ - 1;
      }
      if (!facet_ok) {
        if (from_polar)
          fail(Errc::DegenerateFacet, "polar point " + vec_to_string(fc.fhat) +
                                          " does not support a (d-1)-dimensional facet");
        continue;  // lower-dimensional face met by the scan
      }
      classes_.push_back(std::move(fc));
    }
    if (classes_.empty()) fail(Errc::DegenerateFacet, "no facet classes");
  }

  void check_extreme() {
    // a listed point is extreme iff its active facet functionals span R^d
    for (std::size_t m = 0; m < vertices_.size(); ++m) {
      std::vector<Vec<S>> active;
      for (const auto& fc : classes_) {
        S s = dot(fc.fhat, vertices_[m]);
        if (nearly_equal(abs_value(s), S(1), tol_, S(1)))
          active.push_back(s > S(0) ? fc.fhat : negated(fc.fhat));
      }
      if (matrix_rank(active, rank_thresh()) < dim_)
        fail(Errc::NonExtremePoint, vec_to_string(vertices_[m]));
    }
  }

  int dim_ = 0;
  S tol_ = S(0);
  std::vector<Vec<S>> vertices_;
  std::vector<FacetClass<S>> classes_;
  std::vector<Vec<S>> pending_;
};

}  // namespace polyrig
