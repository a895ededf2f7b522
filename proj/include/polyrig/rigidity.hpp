#pragma once

#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "polyrig/framework.hpp"
#include "polyrig/linalg.hpp"

namespace polyrig {

struct RowLabel {
  Edge e;
  int class_idx = 0;
  int sign = 1;  // +1 when the edge vector lies in cone(F) of the representative facet
};

// One row per (edge, supporting facet class), ordered by (edge order,
// class order). The row carries the facet functional g at the edge tail
// and -g at the head, where g = sign * fhat. For a well-positioned
// framework the row count equals |E(G)|.
template <class S>
struct RigidityMatrix {
  std::vector<RowLabel> labels;
  std::vector<Vec<S>> rows;
  int n = 0;
  int d = 0;
  S tol = S(0);

  int row_count() const { return static_cast<int>(rows.size()); }
  int col_count() const { return n * d; }

  std::string row_name(int i, const std::string& class_name) const {
    const auto& l = labels[i];
    return "(" + std::to_string(l.e.v) + "-" + std::to_string(l.e.w) + "," + class_name + ")";
  }
};

template <class S>
RigidityMatrix<S> build_rigidity_matrix(const Framework<S>& fw, const EdgeColouring& col) {
  RigidityMatrix<S> m;
  m.n = fw.n();
  m.d = fw.dim();
  m.tol = fw.ball->tol();
  for (const auto& ec : col.per_edge) {
    Vec<S> x = fw.edge_vector(ec.e);
    for (const auto& [ci, memb] : ec.classes) {
      const Vec<S>& fhat = fw.ball->classes()[ci].fhat;
      int sign = dot(fhat, x) > S(0) ? 1 : -1;
      Vec<S> row(m.col_count(), S(0));
      for (int k = 0; k < m.d; ++k) {
        S g = sign > 0 ? fhat[k] : S(-fhat[k]);
        row[ec.e.v * m.d + k] = g;
        row[ec.e.w * m.d + k] = -g;
      }
      m.labels.push_back(RowLabel{ec.e, ci, sign});
      m.rows.push_back(std::move(row));
    }
  }
  return m;
}

template <class S>
RigidityMatrix<S> build_rigidity_matrix(const Framework<S>& fw) {
  return build_rigidity_matrix(fw, colour_edges(fw));
}

// kernel of the rigidity matrix = the infinitesimal flex space; the d
// constant fields are always inside, so flex_dim = nullity - d
template <class S>
struct FlexSpace {
  std::vector<Vec<S>> kernel_basis;
  int trivial_dim = 0;
  int flex_dim = 0;
};

template <class S>
S rank_cutoff(const RigidityMatrix<S>& m) {
  return m.tol * matrix_max_abs(m.rows);
}

template <class S>
std::pair<int, FlexSpace<S>> rank_and_kernel(const RigidityMatrix<S>& m) {
  Rref<S> r = m.rows.empty() ? Rref<S>{{}, {}, 0, m.col_count()} : rref(m.rows, rank_cutoff(m));
  r.cols = m.col_count();
  FlexSpace<S> fs;
  fs.kernel_basis = kernel_basis(r);
  fs.trivial_dim = m.d;
  fs.flex_dim = static_cast<int>(fs.kernel_basis.size()) - m.d;
  return {r.rank, std::move(fs)};
}

template <class S>
int rigidity_rank(const Framework<S>& fw) {
  return rank_and_kernel(build_rigidity_matrix(fw)).first;
}

// rank test: rigid iff rank = d|V| - d (a single joint is rigid)
template <class S>
bool is_infinitesimally_rigid(const Framework<S>& fw) {
  return rigidity_rank(fw) == fw.dim() * (fw.n() - 1);
}

struct EdgeRemovalReport {
  Edge e;
  int rank_after = 0;
  int flex_dim_after = 0;
};

struct MinimalRigidityReport {
  bool rigid = false;
  bool minimally_rigid = false;
  std::vector<EdgeRemovalReport> removals;  // one per edge, in edge order
};

// rigid, and removing any single edge (same placement) breaks rigidity
template <class S>
MinimalRigidityReport is_minimally_rigid(const Framework<S>& fw) {
  MinimalRigidityReport rep;
  rep.rigid = is_infinitesimally_rigid(fw);
  rep.minimally_rigid = rep.rigid;
  const int target = fw.dim() * (fw.n() - 1);
  for (const auto& e : fw.graph.edges()) {
    Framework<S> sub = without_edge(fw, e);
    auto [rank, fs] = rank_and_kernel(build_rigidity_matrix(sub));
    rep.removals.push_back(EdgeRemovalReport{e, rank, fs.flex_dim});
    if (rank == target) rep.minimally_rigid = false;
  }
  return rep;
}

// restriction of every kernel vector to the blocks of H is constant
template <class S>
bool is_relatively_rigid(const Framework<S>& fw, const std::vector<int>& subgraph_vertices) {
  if (subgraph_vertices.empty()) fail(Errc::EmptySubgraph, "relative rigidity of empty subgraph");
  auto [rank, fs] = rank_and_kernel(build_rigidity_matrix(fw));
  (void)rank;
  const int d = fw.dim();
  for (const auto& u : fs.kernel_basis) {
    S scale = max_abs(u);
    int h0 = subgraph_vertices[0];
    for (int h : subgraph_vertices) {
      for (int k = 0; k < d; ++k) {
        if (!nearly_equal(u[h * d + k], u[h0 * d + k], fw.ball->tol(), scale)) return false;
      }
    }
  }
  return true;
}

// X_e = intersection of ker(phi_F) over the classes of e
template <class S>
std::vector<Vec<S>> edge_flex_space(const Framework<S>& fw, const EdgeColour& ec) {
  std::vector<Vec<S>> funcs;
  for (const auto& [ci, m] : ec.classes) funcs.push_back(fw.ball->classes()[ci].fhat);
  S thresh = fw.ball->tol() * std::max<S>(S(1), matrix_max_abs(funcs));
  return kernel_basis(rref(funcs, thresh));
}

struct PathCertificate {
  bool found = false;
  // per colour class: the vertices of one monochrome path from v to w
  std::vector<std::pair<int, std::vector<int>>> paths;
};

// Sufficient certificate for u_v = u_w under every flex: a set of v-w
// paths whose X-spaces intersect to {0}. One shortest monochrome path per
// colour class is tried, as in the spanning-tree arguments.
template <class S>
PathCertificate path_certificate(const Framework<S>& fw, int v, int w) {
  if (v == w) fail(Errc::ValidationError, "path certificate needs distinct vertices");
  EdgeColouring col = colour_edges(fw);
  const int d = fw.dim();
  const S thresh = fw.ball->tol();

  PathCertificate cert;
  std::vector<Vec<S>> stacked;  // annihilators of the X_gamma spaces
  for (int colour : col.framework_colours) {
    // BFS in the monochrome subgraph G_F
    std::vector<int> prev(fw.n(), -1);
    std::vector<bool> vis(fw.n(), false);
    std::queue<int> q;
    q.push(v);
    vis[v] = true;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (const auto& ec : col.per_edge) {
        if (!ec.has_class(colour)) continue;
        int b = -1;
        if (ec.e.v == a) b = ec.e.w;
        else if (ec.e.w == a) b = ec.e.v;
        if (b < 0 || vis[b]) continue;
        vis[b] = true;
        prev[b] = a;
        q.push(b);
      }
    }
    if (!vis[w]) continue;
    std::vector<int> path;
    for (int x = w; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());

    // X_gamma = sum of the edge spaces along the path
    std::vector<Vec<S>> gamma_vectors;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Edge e(path[i], path[i + 1]);
      for (auto& b : edge_flex_space(fw, col.of(e))) gamma_vectors.push_back(std::move(b));
    }
    S cut = thresh * std::max<S>(S(1), matrix_max_abs(gamma_vectors));
    for (auto& a : annihilator(gamma_vectors, d, cut)) stacked.push_back(std::move(a));
    cert.paths.emplace_back(colour, std::move(path));
  }
  if (!stacked.empty()) {
    S cut = fw.ball->tol() * std::max<S>(S(1), matrix_max_abs(stacked));
    cert.found = matrix_rank(stacked, cut) == d;
  }
  if (!cert.found) cert.paths.clear();
  return cert;
}

// every constant field c at all joints must be annihilated by the matrix
template <class S>
bool constant_fields_in_kernel(const RigidityMatrix<S>& m) {
  S cut = rank_cutoff(m);
  for (int k = 0; k < m.d; ++k) {
    for (const auto& row : m.rows) {
      S acc(0);
      for (int v = 0; v < m.n; ++v) acc += row[v * m.d + k];
      if (abs_value(acc) > cut) return false;
    }
  }
  return true;
}

// membership of a single vector in ker(M), tolerance-aware
template <class S>
bool in_kernel(const RigidityMatrix<S>& m, const Vec<S>& u) {
  S cut = m.tol * std::max<S>(S(1), matrix_max_abs(m.rows) * max_abs(u));
  for (const auto& row : m.rows)
    if (abs_value(dot(row, u)) > cut) return false;
  return true;
}

template <class S>
bool is_constant_field(const Vec<S>& u, int n, int d, const S& tol) {
  S scale = max_abs(u);
  for (int v = 1; v < n; ++v)
    for (int k = 0; k < d; ++k)
      if (!nearly_equal(u[v * d + k], u[k], tol, scale)) return false;
  return true;
}

}  // namespace polyrig
