#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "polyrig/graph.hpp"
#include "polyrig/polytope.hpp"
#include "polyrig/rng.hpp"

namespace polyrig {

template <class S>
using PolytopePtr = std::shared_ptr<const Polytope<S>>;

// Graph + placement + norm ball. Immutable once built.
template <class S>
struct Framework {
  Graph graph;
  std::vector<Vec<S>> placement;
  PolytopePtr<S> ball;

  int n() const { return graph.n(); }
  int dim() const { return ball->dim(); }
  const Vec<S>& at(int v) const { return placement[v]; }

  // edge vector in the stored orientation: p_min - p_max
  Vec<S> edge_vector(const Edge& e) const { return sub(placement[e.v], placement[e.w]); }
};

template <class S>
Framework<S> make_framework(Graph g, std::vector<Vec<S>> placement, PolytopePtr<S> ball) {
  if (static_cast<int>(placement.size()) != g.n())
    fail(Errc::ValidationError, "placement size does not match vertex count");
  for (const auto& p : placement) {
    if (static_cast<int>(p.size()) != ball->dim())
      fail(Errc::ValidationError, "placement point arity does not match polytope dim");
  }
  for (const auto& e : g.edges()) {
    if (is_zero_vec(sub(placement[e.v], placement[e.w])))
      fail(Errc::CoincidentEndpoints, "edge " + e.name() + " has coincident endpoints");
  }
  return Framework<S>{std::move(g), std::move(placement), std::move(ball)};
}

template <class S>
Framework<S> without_edge(const Framework<S>& fw, const Edge& e) {
  return Framework<S>{fw.graph.without_edge(e), fw.placement, fw.ball};
}

struct EdgeColour {
  Edge e;
  // (class index, membership) sorted by class index
  std::vector<std::pair<int, ConeMembership>> classes;

  bool has_class(int c) const {
    for (const auto& [idx, m] : classes)
      if (idx == c) return true;
    return false;
  }
};

struct EdgeColouring {
  std::vector<EdgeColour> per_edge;            // in graph edge order
  std::vector<std::vector<int>> per_vertex;    // Phi(v)
  std::vector<int> framework_colours;          // Phi(G,p)

  int colour_count() const { return static_cast<int>(framework_colours.size()); }

  const EdgeColour& of(const Edge& e) const {
    for (const auto& ec : per_edge)
      if (ec.e == e) return ec;
    fail(Errc::ValidationError, "edge " + e.name() + " not in colouring");
  }
};

// Phi(vw) for every edge (framework colours), plus the per-vertex and
// global unions.
template <class S>
EdgeColouring colour_edges(const Framework<S>& fw) {
  EdgeColouring out;
  out.per_vertex.assign(fw.n(), {});
  std::set<int> global;
  for (const auto& e : fw.graph.edges()) {
    Vec<S> x = fw.edge_vector(e);
    if (is_zero_vec(x))
      fail(Errc::CoincidentEndpoints, "edge " + e.name() + " has coincident endpoints");
    EdgeColour ec;
    ec.e = e;
    ec.classes = fw.ball->support_with_membership(x);
    for (const auto& [c, m] : ec.classes) {
      global.insert(c);
      out.per_vertex[e.v].push_back(c);
      out.per_vertex[e.w].push_back(c);
    }
    out.per_edge.push_back(std::move(ec));
  }
  for (auto& phi : out.per_vertex) {
    std::sort(phi.begin(), phi.end());
    phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
  }
  out.framework_colours.assign(global.begin(), global.end());
  return out;
}

struct WellPositionedReport {
  bool ok = false;
  std::optional<Edge> witness;
  std::vector<int> witness_classes;
};

// well-positioned: every edge vector lies in the conical hull of exactly
// one facet, with interior membership
template <class S>
WellPositionedReport is_well_positioned(const Framework<S>& fw) {
  EdgeColouring col = colour_edges(fw);
  return is_well_positioned(fw, col);
}

template <class S>
WellPositionedReport is_well_positioned(const Framework<S>&, const EdgeColouring& col) {
  for (const auto& ec : col.per_edge) {
    bool single_interior = ec.classes.size() == 1 &&
                           ec.classes[0].second != ConeMembership::Boundary;
    if (!single_interior) {
      WellPositionedReport r;
      r.ok = false;
      r.witness = ec.e;
      for (const auto& [c, m] : ec.classes) r.witness_classes.push_back(c);
      return r;
    }
  }
  return WellPositionedReport{true, std::nullopt, {}};
}

// Deterministic jitter into the (open, dense) set of well-positioned
// placements. Joint v moves by at most `radius` in the gauge norm; the
// jitter halves on every retry, up to 64 attempts.
template <class S>
Framework<S> perturb_well_positioned(const Framework<S>& fw, const S& radius,
                                     std::uint64_t seed) {
  if (radius <= S(0)) fail(Errc::ValidationError, "perturbation radius must be positive");
  if (is_well_positioned(fw).ok) return fw;

  constexpr int kMaxAttempts = 64;
  constexpr long long kGrid = 16;
  S r = radius;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt, r /= S(2)) {
    std::vector<Vec<S>> moved = fw.placement;
    for (int v = 0; v < fw.n(); ++v) {
      Vec<S> u(fw.dim(), S(0));
      bool nonzero = false;
      for (int c = 0; c < fw.dim(); ++c) {
        SplitMix64 rng(mix_key(seed, 0x70657274757262ULL, v, c, attempt));
        long long t = rng.range(-kGrid, kGrid);
        u[c] = S(t);
        nonzero = nonzero || t != 0;
      }
      if (!nonzero) u[0] = S(1);
      S len = fw.ball->gauge(u);
      moved[v] = add(moved[v], scaled(u, S(r / len)));
    }
    bool edges_ok = true;
    for (const auto& e : fw.graph.edges()) {
      if (is_zero_vec(sub(moved[e.v], moved[e.w]))) { edges_ok = false; break; }
    }
    if (!edges_ok) continue;
    Framework<S> cand{fw.graph, std::move(moved), fw.ball};
    if (is_well_positioned(cand).ok) return cand;
  }
  fail(Errc::PerturbationFailed, "no well-positioned placement found within 64 attempts");
}

template <class S>
Framework<S> translated(const Framework<S>& fw, const Vec<S>& shift) {
  std::vector<Vec<S>> moved = fw.placement;
  for (auto& p : moved) p = add(p, shift);
  return Framework<S>{fw.graph, std::move(moved), fw.ball};
}

template <class S>
Framework<S> scaled_placement(const Framework<S>& fw, const S& factor) {
  std::vector<Vec<S>> moved = fw.placement;
  for (auto& p : moved) p = scaled(p, factor);
  return Framework<S>{fw.graph, std::move(moved), fw.ball};
}

}  // namespace polyrig
