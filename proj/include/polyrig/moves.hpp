#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyrig/reduction.hpp"
#include "polyrig/rigidity.hpp"

namespace polyrig {

namespace detail {

// deterministic family of directions strictly interior to cone(F):
// positive combinations of the representative facet's two vertices (d=2)
template <class S>
std::vector<Vec<S>> interior_directions(const Polytope<S>& P, int class_idx) {
  const Vec<S> a = P.facet_vertex(class_idx, 0);
  const Vec<S> b = P.facet_vertex(class_idx, 1);
  static const std::pair<int, int> weights[] = {{1, 1}, {2, 1}, {1, 2}, {3, 1},
                                                {1, 3}, {5, 2}, {2, 5}};
  std::vector<Vec<S>> out;
  for (auto [p, q] : weights) out.push_back(add(scaled(a, S(p)), scaled(b, S(q))));
  return out;
}

template <class S>
S cross2(const Vec<S>& a, const Vec<S>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

// p1 + t u1 = p2 + s u2; empty when the directions are parallel
template <class S>
std::optional<std::pair<S, S>> line_intersection(const Vec<S>& p1, const Vec<S>& u1,
                                                 const Vec<S>& p2, const Vec<S>& u2,
                                                 const S& tol) {
  S det = cross2(u1, negated(u2));
  S scale = std::max<S>(max_abs(u1), max_abs(u2));
  if (abs_value(det) <= tol * std::max<S>(S(1), scale * scale)) return std::nullopt;
  Vec<S> rhs = sub(p2, p1);
  S t = cross2(rhs, negated(u2)) / det;
  S s = cross2(u1, rhs) / det;
  return std::make_pair(t, s);
}

// the edge has exactly the expected class, with interior membership
template <class S>
bool edge_has_single_colour(const Polytope<S>& P, const Vec<S>& x, int expected) {
  if (is_zero_vec(x)) return false;
  auto sup = P.support_classes(x);
  return sup.size() == 1 && sup[0] == expected;
}

template <class S>
void require_well_positioned(const Framework<S>& fw) {
  if (!is_well_positioned(fw).ok)
    fail(Errc::NotWellPositioned, "move requires a well-positioned framework");
}

template <class S>
void require_plane(const Framework<S>& fw) {
  if (fw.dim() != 2) fail(Errc::DimensionUnsupported, "graph moves are defined for d = 2");
}

}  // namespace detail

// Henneberg 1: adjoin a vertex joined to v1 and v2 by edges coloured c1
// and c2. The joint goes at the crossing of interior rays of the two
// double cones.
template <class S>
Framework<S> henneberg1(const Framework<S>& fw, int v1, int v2, int c1, int c2) {
  detail::require_plane(fw);
  detail::require_well_positioned(fw);
  if (v1 == v2 || v1 < 0 || v2 < 0 || v1 >= fw.n() || v2 >= fw.n())
    fail(Errc::ValidationError, "H1 needs two distinct base vertices");
  if (c1 == c2 || c1 < 0 || c2 < 0 || c1 >= fw.ball->class_count() ||
      c2 >= fw.ball->class_count())
    fail(Errc::ValidationError, "H1 needs two distinct facet classes");

  const auto dirs1 = detail::interior_directions(*fw.ball, c1);
  const auto dirs2 = detail::interior_directions(*fw.ball, c2);
  const S tol = fw.ball->tol();
  for (const auto& u1 : dirs1) {
    for (const auto& u2 : dirs2) {
      auto hit = detail::line_intersection(fw.at(v1), u1, fw.at(v2), u2, tol);
      if (!hit) continue;
      auto [t, s] = *hit;
      if (t == S(0) || s == S(0)) continue;
      Vec<S> q = add(fw.at(v1), scaled(u1, t));
      if (!detail::edge_has_single_colour(*fw.ball, sub(q, fw.at(v1)), c1)) continue;
      if (!detail::edge_has_single_colour(*fw.ball, sub(q, fw.at(v2)), c2)) continue;
      Move m{MoveKind::H1, v1, v2, -1, {}, {}};
      std::vector<Vec<S>> pl = fw.placement;
      pl.push_back(std::move(q));
      return make_framework<S>(apply_move(fw.graph, m), std::move(pl), fw.ball);
    }
  }
  fail(Errc::EmptyConeIntersection, "no placement in both double cones");
}

// Henneberg 2: remove edge (v1,v2), adjoin a vertex on the line through
// its endpoints and inside the double cone of class c2 seen from v3.
template <class S>
Framework<S> henneberg2(const Framework<S>& fw, const Edge& split, int v3, int c2) {
  detail::require_plane(fw);
  detail::require_well_positioned(fw);
  if (!fw.graph.has_edge(split.v, split.w))
    fail(Errc::ValidationError, "H2 needs an existing edge to split");
  if (v3 == split.v || v3 == split.w || v3 < 0 || v3 >= fw.n())
    fail(Errc::ValidationError, "H2 needs a third distinct vertex");
  EdgeColouring col = colour_edges(fw);
  const auto& ec = col.of(split);
  const int c1 = ec.classes[0].first;
  if (c2 == c1 || c2 < 0 || c2 >= fw.ball->class_count())
    fail(Errc::ValidationError, "H2 colour must differ from the split edge's colour");

  const Vec<S> p1 = fw.at(split.v);
  const Vec<S> dir = sub(fw.at(split.w), p1);
  const Vec<S>& p3 = fw.at(v3);
  const S tol = fw.ball->tol();

  // critical parameters: crossings with the boundary rays of the double cone
  std::vector<S> criticals = {S(0), S(1)};
  for (int k = 0; k < 2; ++k) {
    Vec<S> ray = fw.ball->facet_vertex(c2, k);
    auto hit = detail::line_intersection(p1, dir, p3, ray, tol);
    if (hit) criticals.push_back(hit->first);
  }
  std::sort(criticals.begin(), criticals.end());
  std::vector<S> candidates;
  candidates.push_back(criticals.front() - S(1));
  for (std::size_t i = 0; i + 1 < criticals.size(); ++i)
    candidates.push_back((criticals[i] + criticals[i + 1]) / S(2));
  candidates.push_back(criticals.back() + S(1));

  // two passes: joints distinct from every existing placement are
  // preferred, coincidence with a non-neighbour is legal but starves
  // later moves
  for (int pass = 0; pass < 2; ++pass) {
    for (const S& t : candidates) {
      if (t == S(0) || t == S(1)) continue;
      Vec<S> q = add(p1, scaled(dir, t));
      if (pass == 0) {
        bool clash = false;
        for (const auto& p : fw.placement)
          if (p == q) { clash = true; break; }
        if (clash) continue;
      }
      if (!detail::edge_has_single_colour(*fw.ball, sub(q, p3), c2)) continue;
      if (!detail::edge_has_single_colour(*fw.ball, sub(q, p1), c1)) continue;
      if (!detail::edge_has_single_colour(*fw.ball, sub(q, fw.at(split.w)), c1)) continue;
      Move m{MoveKind::H2, split.v, split.w, v3, {}, {}};
      std::vector<Vec<S>> pl = fw.placement;
      pl.push_back(std::move(q));
      return make_framework<S>(apply_move(fw.graph, m), std::move(pl), fw.ball);
    }
  }
  fail(Errc::EmptyIntersection, "the line misses the double cone");
}

// Vertex split: new joint near p(v1), offset into cone(c2), taking over
// the `reassigned` edges; all original colours must survive.
template <class S>
Framework<S> vertex_split(const Framework<S>& fw, int v1, int v2,
                          const std::vector<int>& reassigned, int c2) {
  detail::require_plane(fw);
  detail::require_well_positioned(fw);
  if (!fw.graph.has_edge(v1, v2)) fail(Errc::ValidationError, "VSplit needs the anchor edge");
  EdgeColouring col = colour_edges(fw);
  const int c1 = col.of(Edge(v1, v2)).classes[0].first;
  if (c2 == c1 || c2 < 0 || c2 >= fw.ball->class_count())
    fail(Errc::ValidationError, "VSplit colour must differ from the anchor edge's colour");
  for (int w : reassigned) {
    if (w == v2 || !fw.graph.has_edge(v1, w))
      fail(Errc::ValidationError, "VSplit reassigns only other edges incident to the vertex");
  }

  Move m{MoveKind::VSplit, v1, v2, -1, reassigned, {}};
  Graph g2 = apply_move(fw.graph, m);
  const Vec<S> u = detail::interior_directions(*fw.ball, c2)[0];
  S delta = frac<S>(1, 4) / std::max<S>(S(1), fw.ball->gauge(u));
  for (int attempt = 0; attempt < 64; ++attempt, delta /= S(2)) {
    std::vector<Vec<S>> pl = fw.placement;
    pl.push_back(add(fw.at(v1), scaled(u, delta)));
    const int v0 = fw.n();
    if (!detail::edge_has_single_colour(*fw.ball, sub(pl[v0], pl[v1]), c2)) continue;
    if (!detail::edge_has_single_colour(*fw.ball, sub(pl[v0], pl[v2]), c1)) continue;
    bool colours_kept = true;
    for (int w : reassigned) {
      int want = col.of(Edge(v1, w)).classes[0].first;
      if (!detail::edge_has_single_colour(*fw.ball, sub(pl[v0], pl[w]), want)) {
        colours_kept = false;
        break;
      }
    }
    if (!colours_kept) continue;
    return make_framework<S>(g2, std::move(pl), fw.ball);
  }
  fail(Errc::RadiusSearchFailed, "no offset preserved the colouring");
}

namespace detail {

// signed facets through an extreme point x0 of a planar ball: exactly two
template <class S>
std::vector<std::pair<int, int>> active_signed_facets(const Polytope<S>& P, const Vec<S>& x0) {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < P.class_count(); ++c) {
    S s = dot(P.classes()[c].fhat, x0);
    if (nearly_equal(abs_value(s), S(1), P.tol(), S(1))) out.emplace_back(c, s > S(0) ? 1 : -1);
  }
  return out;
}

}  // namespace detail

// A well-positioned minimally rigid K4 for any planar polyhedral norm:
// walks two facets adjacent to an extreme point, normalizes the two
// relative-interior points against each other, then scales the fourth
// joint by a small factor until the expected colouring appears.
template <class S>
Framework<S> k4_gadget(PolytopePtr<S> ball) {
  if (ball->dim() != 2) fail(Errc::DimensionUnsupported, "the K4 gadget is planar");
  const Polytope<S>& P = *ball;

  // deterministic extreme point: the lexicographically greatest vertex
  int x0_idx = 0;
  for (std::size_t i = 1; i < P.vertices().size(); ++i)
    if (lex_less(P.vertices()[x0_idx], P.vertices()[i])) x0_idx = static_cast<int>(i);
  const Vec<S> x0 = P.vertices()[x0_idx];

  auto active = detail::active_signed_facets(P, x0);
  if (active.size() != 2) fail(Errc::SearchFailed, "extreme point not on exactly two facets");
  auto [ca, sa] = active[0];
  auto [cb, sb] = active[1];
  Vec<S> g1 = sa > 0 ? P.classes()[ca].fhat : negated(P.classes()[ca].fhat);
  Vec<S> g2 = sb > 0 ? P.classes()[cb].fhat : negated(P.classes()[cb].fhat);

  // the other endpoint of each signed facet
  const S eq_tol = P.tol() * std::max<S>(S(1), max_abs(x0));
  auto other_end = [&](int cls, int sign) {
    for (int k = 0; k < 2; ++k) {
      Vec<S> y = P.facet_vertex(cls, k);
      if (sign < 0) y = negated(y);
      bool same = true;
      for (int j = 0; j < 2; ++j)
        if (abs_value(S(y[j] - x0[j])) > eq_tol) same = false;
      if (!same) return y;
    }
    fail(Errc::SearchFailed, "degenerate facet");
  };
  const Vec<S> y1 = other_end(ca, sa);
  const Vec<S> y2 = other_end(cb, sb);

  const S tol = P.tol();
  S t = frac<S>(1, 4);
  for (int attempt = 0; attempt < 64; ++attempt, t /= S(2)) {
    Vec<S> x1 = add(scaled(x0, S(1) - t), scaled(y1, t));
    // normalization x1.g2 = x2.g1 fixes the second parameter
    S num = dot(y1, g2) - S(1);
    S den = dot(y2, g1) - S(1);
    if (den == S(0)) fail(Errc::SearchFailed, "facet geometry degenerate at the base point");
    S s = t * num / den;
    if (s <= S(0) || s >= S(1)) continue;
    Vec<S> x2 = add(scaled(x0, S(1) - s), scaled(y2, s));

    // near the corner both cross-values must be positive and dominate all
    // other facet functionals
    auto dominates = [&](const Vec<S>& x, const Vec<S>& own, const Vec<S>& runner) {
      S rv = dot(x, runner);
      if (rv <= tol) return false;
      for (int c = 0; c < P.class_count(); ++c) {
        for (int sg : {1, -1}) {
          Vec<S> g = sg > 0 ? P.classes()[c].fhat : negated(P.classes()[c].fhat);
          if (g == own || g == runner) continue;
          if (dot(x, g) >= rv - tol * std::max<S>(S(1), abs_value(rv))) return false;
        }
      }
      return true;
    };
    if (dot(x1, g2) <= S(0) || dot(x2, g1) <= S(0)) continue;
    if (!dominates(x1, g1, g2) || !dominates(x2, g2, g1)) continue;

    Graph k4 = Graph::complete(4);
    S eps = frac<S>(1, 4);
    for (int inner = 0; inner < 64; ++inner, eps /= S(2)) {
      std::vector<Vec<S>> pl = {Vec<S>(2, S(0)), x1, scaled(x2, S(1) - eps),
                                add(x1, scaled(x2, S(1) + eps))};
      bool distinct = true;
      for (int a = 0; a < 4 && distinct; ++a)
        for (int b = a + 1; b < 4 && distinct; ++b)
          if (pl[a] == pl[b]) distinct = false;
      if (!distinct) continue;
      Framework<S> cand{k4, pl, ball};
      if (!is_well_positioned(cand).ok) continue;
      if (!is_minimally_rigid(cand).minimally_rigid) continue;
      return cand;
    }
  }
  fail(Errc::SearchFailed, "K4 gadget search exhausted");
}

// Vertex-to-K4: plant a scaled copy of the gadget at p(v0); incident
// edges may move to any gadget joint, keeping their colours.
template <class S>
Framework<S> vertex_to_k4(const Framework<S>& fw, int v0, const std::vector<int>& reassigned,
                          const std::vector<int>& slots) {
  detail::require_plane(fw);
  detail::require_well_positioned(fw);
  if (v0 < 0 || v0 >= fw.n()) fail(Errc::ValidationError, "VtoK4 needs an existing vertex");
  if (reassigned.size() != slots.size())
    fail(Errc::ValidationError, "VtoK4 reassignment arity mismatch");
  for (std::size_t i = 0; i < reassigned.size(); ++i) {
    if (!fw.graph.has_edge(v0, reassigned[i]))
      fail(Errc::ValidationError, "VtoK4 reassigns only edges at the replaced vertex");
    if (slots[i] < 1 || slots[i] > 3)
      fail(Errc::ValidationError, "VtoK4 slots name the three gadget joints");
  }

  EdgeColouring col = colour_edges(fw);
  Framework<S> gadget = k4_gadget<S>(fw.ball);
  Move m{MoveKind::VtoK4, v0, -1, -1, reassigned, slots};
  Graph g2 = apply_move(fw.graph, m);

  S eps = frac<S>(1, 4);
  for (int attempt = 0; attempt < 64; ++attempt, eps /= S(2)) {
    std::vector<Vec<S>> pl = fw.placement;
    for (int k = 1; k <= 3; ++k) pl.push_back(add(fw.at(v0), scaled(gadget.placement[k], eps)));
    Framework<S> cand{g2, pl, fw.ball};
    bool ok = true;
    for (std::size_t i = 0; i < reassigned.size() && ok; ++i) {
      int w = reassigned[i];
      int target = fw.n() + slots[i] - 1;
      int want = col.of(Edge(v0, w)).classes[0].first;
      ok = detail::edge_has_single_colour(*fw.ball, sub(pl[target], pl[w]), want);
    }
    if (!ok) continue;
    if (!is_well_positioned(cand).ok) continue;
    return cand;
  }
  fail(Errc::RadiusSearchFailed, "no gadget scale preserved the colouring");
}

}  // namespace polyrig
