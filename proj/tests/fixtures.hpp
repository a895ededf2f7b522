#pragma once

// The worked examples used across the test suites: small frameworks with
// known colourings, ranks and rigidity verdicts.

#include <memory>

#include "polyrig/framework.hpp"
#include "polyrig/gallery.hpp"

namespace polyrig::fixtures {

using R = Rat;

template <class S>
PolytopePtr<S> share(Polytope<S> p) {
  return std::make_shared<const Polytope<S>>(std::move(p));
}

inline PolytopePtr<R> l1_2() {
  static PolytopePtr<R> p = share(crosspolytope<R>(2));
  return p;
}

inline PolytopePtr<R> linf_2() {
  static PolytopePtr<R> p = share(hypercube<R>(2));
  return p;
}

inline PolytopePtr<R> linf_3() {
  static PolytopePtr<R> p = share(hypercube<R>(3));
  return p;
}

inline Vec<R> rv(std::vector<long long> xs) {
  Vec<R> v;
  for (auto x : xs) v.push_back(R(x));
  return v;
}

// K2 in the l1 plane, placed along the diagonal: well-positioned, one row,
// flex dimension 1
inline Framework<R> k2_l1_diagonal() {
  return make_framework<R>(Graph(2, {{0, 1}}), {rv({0, 0}), {R(1, 2), R(1, 2)}}, l1_2());
}

// K2 in the l1 plane along the x-axis: not well-positioned, two rows,
// infinitesimally rigid yet continuously flexible
inline Framework<R> k2_l1_axis() {
  return make_framework<R>(Graph(2, {{0, 1}}), {rv({0, 0}), rv({1, 0})}, l1_2());
}

// K3 in the l-infinity plane at a(-1,0), b(1,0), c(0,2): well-positioned,
// rank 3, flex dimension 1, the edges at c monochrome
inline Framework<R> k3_linf() {
  return make_framework<R>(Graph(3, {{0, 1}, {0, 2}, {1, 2}}),
                           {rv({-1, 0}), rv({1, 0}), rv({0, 2})}, linf_2());
}

// the 4-vertex framework whose {v1,v2,v3} subframework is relatively rigid
inline Framework<R> quad4_linf() {
  return make_framework<R>(
      Graph(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 2}}),
      {rv({0, 0}), rv({10, 0}), {R(10), R(3)}, {R(10), R(14)}}, linf_2());
}

// the 8-vertex minimally rigid framework whose two monochrome subgraphs
// are spanning trees (coordinates scaled by 10 to stay integral)
inline Framework<R> ring8_linf() {
  Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
              {0, 5}, {1, 4}, {3, 6}, {1, 5}, {2, 7}, {3, 7}});
  std::vector<Vec<R>> p = {rv({0, 0}),  rv({10, -4}), rv({20, 0}),  rv({25, 10}),
                           rv({20, 20}), rv({10, 24}), rv({0, 20}),  rv({-5, 10})};
  return make_framework<R>(std::move(g), std::move(p), linf_2());
}

// the (2,2)-tight 6-vertex graph of the flexible-regular example
inline Graph hex6_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {1, 3}, {1, 5}, {0, 4}, {0, 5}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
}

// its drawn placement (x10): infinitesimally flexible under l-infinity
// because the vertical-colour subgraph misses vertex b
inline std::vector<Vec<R>> hex6_placement() {
  return {rv({-5, 0}), rv({10, 8}), rv({25, 0}), rv({25, 16}), rv({10, 22}), rv({-5, 16})};
}

inline Framework<R> hex6_linf() {
  return make_framework<R>(hex6_graph(), hex6_placement(), linf_2());
}

// the same placement under the submodular-norm hexagon: minimally rigid
inline PolytopePtr<R> submodular_hexagon() {
  static PolytopePtr<R> p =
      share(lovasz_norm(SubmodularFn<R>::validate(2, {R(0), R(1), R(2), R(2)})));
  return p;
}

inline Framework<R> hex6_submodular() {
  return make_framework<R>(hex6_graph(), hex6_placement(), submodular_hexagon());
}

// the 3D l-infinity framework on K4 minus bc: minimally rigid but not
// well-positioned, with a non-tree monochrome subgraph
inline Framework<R> tetra3d_linf() {
  return make_framework<R>(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}),
                           {rv({0, 0, 0}), rv({1, 1, 0}), rv({-1, 1, 0}), rv({0, 1, 1})},
                           linf_3());
}

// K3 under the additive norm |x.b1| + |x.b2| + |x.b3|: three framework
// colours, each 2-colour union spans, yet flexible
inline std::vector<Vec<R>> additive_base() {
  return {rv({1, 0}), rv({0, 1}), rv({1, 1})};
}

inline PolytopePtr<R> additive_hexagon() {
  static PolytopePtr<R> p = share(additive_norm(additive_base()));
  return p;
}

inline Framework<R> additive_k3() {
  return make_framework<R>(Graph(3, {{0, 1}, {0, 2}, {1, 2}}),
                           {rv({0, 0}), rv({2, 2}), rv({-1, 3})}, additive_hexagon());
}

// K_{1,8} with the hub at the origin and leaves on the octagon vertices:
// every edge lies on an extreme-point ray, rank 16
inline Framework<double> star8_octagon() {
  auto oct = share(ngon(8));
  std::vector<std::pair<int, int>> edges;
  std::vector<Vec<double>> pl = {{0.0, 0.0}};
  for (int k = 0; k < 8; ++k) {
    edges.emplace_back(0, k + 1);
    pl.push_back(oct->vertices()[k]);
  }
  return make_framework<double>(Graph(9, std::move(edges)), std::move(pl), oct);
}

}  // namespace polyrig::fixtures
