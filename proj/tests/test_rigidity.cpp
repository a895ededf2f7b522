#include "doctest.h"

#include <cmath>
#include <map>

#include "polyrig/rigidity.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace polyrig;
using namespace polyrig::fixtures;

namespace {

// golden-matrix comparison: same rows up to a sign flip per row
template <class S>
bool rows_match_up_to_sign(std::vector<Vec<S>> got, std::vector<Vec<S>> want, const S& tol) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(want.size(), false);
  for (const auto& g : got) {
    bool matched = false;
    for (std::size_t j = 0; j < want.size() && !matched; ++j) {
      if (used[j]) continue;
      bool plus = true, minus = true;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (abs_value(S(g[k] - want[j][k])) > tol) plus = false;
        if (abs_value(S(g[k] + want[j][k])) > tol) minus = false;
      }
      if (plus || minus) { used[j] = true; matched = true; }
    }
    if (!matched) return false;
  }
  return true;
}

Vec<R> row12(std::vector<long long> xs) { return rv(std::move(xs)); }

}  // namespace

TEST_CASE("golden matrix: K2 in l1, both placements") {
  auto m1 = build_rigidity_matrix(k2_l1_diagonal());
  REQUIRE(m1.row_count() == 1);
  CHECK(rows_match_up_to_sign<R>(m1.rows, {rv({1, 1, -1, -1})}, R(0)));

  auto m2 = build_rigidity_matrix(k2_l1_axis());
  REQUIRE(m2.row_count() == 2);
  CHECK(rows_match_up_to_sign<R>(m2.rows, {rv({1, 1, -1, -1}), rv({1, -1, -1, 1})}, R(0)));

  auto [r1, f1] = rank_and_kernel(m1);
  CHECK(r1 == 1);
  CHECK(f1.flex_dim == 1);
  auto [r2, f2] = rank_and_kernel(m2);
  CHECK(r2 == 2);
  CHECK(f2.flex_dim == 0);
  CHECK(is_infinitesimally_rigid(k2_l1_axis()));
  CHECK(!is_infinitesimally_rigid(k2_l1_diagonal()));
}

TEST_CASE("golden matrix: K3 in the l-infinity plane") {
  auto fw = k3_linf();
  auto m = build_rigidity_matrix(fw);
  REQUIRE(m.row_count() == 3);
  // edges in sorted order: (0-1), (0-2), (1-2)
  CHECK(m.labels[0].e == Edge(0, 1));
  CHECK(m.labels[1].e == Edge(0, 2));
  CHECK(m.labels[2].e == Edge(1, 2));
  CHECK(rows_match_up_to_sign<R>(m.rows,
                                 {rv({1, 0, -1, 0, 0, 0}),
                                  rv({0, 1, 0, 0, 0, -1}),
                                  rv({0, 0, 0, 1, 0, -1})},
                                 R(0)));
  auto [rank, flex] = rank_and_kernel(m);
  CHECK(rank == 3);
  CHECK(flex.flex_dim == 1);
  CHECK(!is_infinitesimally_rigid(fw));
}

TEST_CASE("golden matrix: K3 under the additive norm") {
  auto m = build_rigidity_matrix(additive_k3());
  REQUIRE(m.row_count() == 3);
  CHECK(rows_match_up_to_sign<R>(m.rows,
                                 {row12({-2, -2, 2, 2, 0, 0}),
                                  row12({0, -2, 0, 0, 0, 2}),
                                  row12({0, 0, 2, 0, -2, 0})},
                                 R(0)));
  auto [rank, flex] = rank_and_kernel(m);
  CHECK(rank == 3);
  CHECK(flex.flex_dim == 1);
}

TEST_CASE("golden matrix: the 3D l-infinity example, 10 x 12") {
  auto fw = tetra3d_linf();
  auto m = build_rigidity_matrix(fw);
  REQUIRE(m.row_count() == 10);
  REQUIRE(m.col_count() == 12);

  auto row = [&](int va, std::vector<long long> at_a, int vb, std::vector<long long> at_b) {
    Vec<R> r(12, R(0));
    for (int k = 0; k < 3; ++k) r[va * 3 + k] = R(at_a[k]);
    for (int k = 0; k < 3; ++k) r[vb * 3 + k] = R(at_b[k]);
    return r;
  };
  // the printed 10x12 matrix (a,b,c,d = 0,1,2,3)
  std::vector<Vec<R>> want = {
      row(0, {1, 0, 0}, 1, {-1, 0, 0}),   // (ab,F1)
      row(0, {0, 1, 0}, 1, {0, -1, 0}),   // (ab,F2)
      row(0, {1, 0, 0}, 2, {-1, 0, 0}),   // (ac,F1)
      row(0, {0, 1, 0}, 2, {0, -1, 0}),   // (ac,F2)
      row(0, {0, 1, 0}, 3, {0, -1, 0}),   // (ad,F2)
      row(0, {0, 0, 1}, 3, {0, 0, -1}),   // (ad,F3)
      row(1, {1, 0, 0}, 3, {-1, 0, 0}),   // (bd,F1)
      row(1, {0, 0, 1}, 3, {0, 0, -1}),   // (bd,F3)
      row(2, {1, 0, 0}, 3, {-1, 0, 0}),   // (cd,F1)
      row(2, {0, 0, 1}, 3, {0, 0, -1}),   // (cd,F3)
  };
  CHECK(rows_match_up_to_sign<R>(m.rows, want, R(0)));

  auto [rank, flex] = rank_and_kernel(m);
  CHECK(rank == 9);
  CHECK(is_infinitesimally_rigid(fw));

  auto rep = is_minimally_rigid(fw);
  CHECK(rep.rigid);
  CHECK(rep.minimally_rigid);
  for (const auto& rr : rep.removals) {
    if (rr.e == Edge(0, 3)) {
      CHECK(rr.rank_after == 7);
      CHECK(rr.flex_dim_after == 2);
    } else {
      CHECK(rr.rank_after == 8);
      CHECK(rr.flex_dim_after == 1);
    }
  }
}

TEST_CASE("golden rows: K_{1,8} on the octagon") {
  auto fw = star8_octagon();
  auto m = build_rigidity_matrix(fw);
  REQUIRE(m.row_count() == 16);  // two rows per edge

  const double t = std::sqrt(2.0) - 1.0;
  // rows of the hub-to-(1,0) edge: functionals (1, t) and (1, -t)
  std::vector<Vec<double>> got;
  for (int i = 0; i < m.row_count(); ++i)
    if (m.labels[i].e == Edge(0, 1)) got.push_back(m.rows[i]);
  REQUIRE(got.size() == 2);
  std::vector<Vec<double>> want(2, Vec<double>(18, 0.0));
  want[0][0] = 1.0; want[0][1] = t; want[0][2] = -1.0; want[0][3] = -t;
  want[1][0] = 1.0; want[1][1] = -t; want[1][2] = -1.0; want[1][3] = t;
  CHECK(rows_match_up_to_sign<double>(got, want, 1e-9));

  auto [rank, flex] = rank_and_kernel(m);
  CHECK(rank == 16);  // 2|E| = 2|V| - 2
  CHECK(is_infinitesimally_rigid(fw));
  CHECK(flex.flex_dim == 0);
}

TEST_CASE("golden matrix: the submodular-norm 6-vertex example, 10 x 12") {
  auto fw = hex6_submodular();
  auto m = build_rigidity_matrix(fw);
  REQUIRE(m.row_count() == 10);
  REQUIRE(m.col_count() == 12);

  auto row = [&](int va, std::vector<long long> at_a, int vb, std::vector<long long> at_b) {
    Vec<R> r(12, R(0));
    for (int k = 0; k < 2; ++k) r[va * 2 + k] = R(at_a[k]);
    for (int k = 0; k < 2; ++k) r[vb * 2 + k] = R(at_b[k]);
    return r;
  };
  // a..f = 0..5; vertical-colour rows carry the facet functional (0,2)
  std::vector<Vec<R>> want = {
      row(0, {1, 1}, 1, {-1, -1}),    // (ab,F1)
      row(0, {0, 2}, 4, {0, -2}),     // (ae,F2)
      row(0, {0, 2}, 5, {0, -2}),     // (af,F2)
      row(1, {-1, 1}, 2, {1, -1}),    // (bc,F3)
      row(1, {1, 1}, 3, {-1, -1}),    // (bd,F1)
      row(1, {-1, 1}, 5, {1, -1}),    // (bf,F3)
      row(2, {0, 2}, 3, {0, -2}),     // (cd,F2)
      row(2, {0, 2}, 4, {0, -2}),     // (ce,F2)
      row(3, {-1, 1}, 4, {1, -1}),    // (de,F3)
      row(4, {1, 1}, 5, {-1, -1}),    // (ef,F1)
  };
  CHECK(rows_match_up_to_sign<R>(m.rows, want, R(0)));

  auto [rank, flex] = rank_and_kernel(m);
  CHECK(rank == 10);
  CHECK(flex.flex_dim == 0);
  CHECK(is_minimally_rigid(fw).minimally_rigid);
}

TEST_CASE("empty and single-joint cases") {
  auto edgeless = make_framework<R>(Graph(3, {}), {rv({0, 0}), rv({1, 0}), rv({0, 1})}, l1_2());
  auto m = build_rigidity_matrix(edgeless);
  auto [rank, flex] = rank_and_kernel(m);
  CHECK(rank == 0);
  CHECK(flex.kernel_basis.size() == 6);
  CHECK(!is_infinitesimally_rigid(edgeless));

  auto single = make_framework<R>(Graph(1, {}), {rv({2, 3})}, l1_2());
  CHECK(is_infinitesimally_rigid(single));
  CHECK(is_minimally_rigid(single).minimally_rigid);
}

TEST_CASE("relative rigidity") {
  CHECK(is_relatively_rigid(quad4_linf(), {0, 1, 2}));
  CHECK(is_relatively_rigid(quad4_linf(), {2}));
  CHECK(!is_relatively_rigid(k3_linf(), {0, 2}));
  CHECK_THROWS_AS(is_relatively_rigid(quad4_linf(), {}), Error);
}

TEST_CASE("path certificates") {
  // two monochrome paths between v1 and v3 pin the pair
  auto cert = path_certificate(quad4_linf(), 0, 2);
  CHECK(cert.found);
  CHECK(cert.paths.size() == 2);

  // an edge along an extreme-point ray certifies its own endpoints
  auto ray = path_certificate(k2_l1_axis(), 0, 1);
  CHECK(ray.found);

  // disconnected vertices admit no certificate
  auto split = make_framework<R>(Graph(4, {{0, 1}, {2, 3}}),
                                 {rv({0, 0}), {R(1), R(1, 3)}, rv({5, 0}), {R(6), R(1, 3)}},
                                 l1_2());
  CHECK(!path_certificate(split, 0, 2).found);

  // soundness: a certificate forces equal kernel blocks on {v,w}
  CHECK(is_relatively_rigid(quad4_linf(), {0, 2}));
  CHECK(is_relatively_rigid(k2_l1_axis(), {0, 1}));
}

TEST_CASE("kernel sanity invariants") {
  for (const auto& fw : {k2_l1_diagonal(), k3_linf(), ring8_linf(), additive_k3()}) {
    auto m = build_rigidity_matrix(fw);
    CHECK(constant_fields_in_kernel(m));
    auto [rank, flex] = rank_and_kernel(m);
    CHECK(rank <= fw.dim() * fw.n() - fw.dim());
    for (const auto& u : flex.kernel_basis) CHECK(in_kernel(m, u));
  }
  auto m3 = build_rigidity_matrix(tetra3d_linf());
  CHECK(constant_fields_in_kernel(m3));
}

TEST_CASE("rank is translation invariant and survives vertex relabeling") {
  auto fw = ring8_linf();
  int base = rigidity_rank(fw);
  CHECK(base == rigidity_rank(translated(fw, rv({-11, 23}))));

  // relabeling flips stored orientations of some rows; rank and kernel
  // dimension stay put
  std::vector<int> perm = {3, 1, 4, 0, 6, 2, 7, 5};
  std::vector<Vec<R>> pl(8);
  for (int v = 0; v < 8; ++v) pl[perm[v]] = fw.placement[v];
  auto relab = make_framework<R>(fw.graph.relabeled(perm), pl, fw.ball);
  CHECK(base == rigidity_rank(relab));
}

TEST_CASE("exact rank agrees with the minor-expansion oracle") {
  SplitMix64 rng(555);
  int checked = 0;
  for (int it = 0; it < 24; ++it) {
    int n = 3 + static_cast<int>(rng.below(3));  // 3..5 vertices
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (rng.below(100) < 55) edges.emplace_back(v, w);
    std::vector<Vec<R>> pl;
    for (int v = 0; v < n; ++v) pl.push_back({R(rng.range(-20, 20), 2), R(rng.range(-20, 20), 2)});
    bool ok = true;
    for (auto [v, w] : edges)
      if (pl[v] == pl[w]) ok = false;
    if (!ok) continue;
    auto ball = (it % 2 == 0) ? l1_2() : linf_2();
    auto fw = make_framework<R>(Graph(n, edges), pl, ball);
    auto m = build_rigidity_matrix(fw);
    auto [rank, flex] = rank_and_kernel(m);
    CHECK(rank == oracles::rank_by_minors(m.rows));
    ++checked;
  }
  CHECK(checked >= 12);
}
