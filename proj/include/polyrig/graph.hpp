#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyrig/errors.hpp"

namespace polyrig {

// Undirected edge stored with v < w.
struct Edge {
  int v = 0, w = 0;
  Edge() = default;
  Edge(int a, int b) : v(std::min(a, b)), w(std::max(a, b)) {}
  friend bool operator==(const Edge& a, const Edge& b) { return a.v == b.v && a.w == b.w; }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.v != b.v ? a.v < b.v : a.w < b.w;
  }
  std::string name() const { return std::to_string(v) + "-" + std::to_string(w); }
};

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_pairs) : n_(n) {
    if (n < 0) fail(Errc::ValidationError, "negative vertex count");
    std::set<Edge> seen;
    for (auto [a, b] : edge_pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        fail(Errc::ValidationError, "edge endpoint out of range");
      if (a == b) fail(Errc::ValidationError, "loop edge " + std::to_string(a));
      seen.insert(Edge(a, b));
    }
    edges_.assign(seen.begin(), seen.end());
  }

  static Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
  }

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int a, int b) const {
    Edge e(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_) {
      if (e.v == v) out.push_back(e.w);
      else if (e.w == v) out.push_back(e.v);
    }
    return out;
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  Graph with_edge(int a, int b) const {
    auto pairs = edge_pairs();
    pairs.emplace_back(a, b);
    return Graph(n_, std::move(pairs));
  }

  Graph without_edge(const Edge& e) const {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& f : edges_)
      if (!(f == e)) pairs.emplace_back(f.v, f.w);
    return Graph(n_, std::move(pairs));
  }

  Graph with_vertex() const { return Graph(n_ + 1, edge_pairs()); }

  // removes vertex v, compacting ids above it
  Graph without_vertex(int v) const {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : edges_) {
      if (e.v == v || e.w == v) continue;
      int a = e.v > v ? e.v - 1 : e.v;
      int b = e.w > v ? e.w - 1 : e.w;
      pairs.emplace_back(a, b);
    }
    return Graph(n_ - 1, std::move(pairs));
  }

  // relabel with perm[old] = new
  Graph relabeled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : edges_) pairs.emplace_back(perm[e.v], perm[e.w]);
    return Graph(n_, std::move(pairs));
  }

  // subgraph induced on the given vertices; ids become positions in `keep`
  Graph induced(const std::vector<int>& keep) const {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : edges_) {
      auto a = pos.find(e.v), b = pos.find(e.w);
      if (a != pos.end() && b != pos.end()) pairs.emplace_back(a->second, b->second);
    }
    return Graph(static_cast<int>(keep.size()), std::move(pairs));
  }

  std::vector<std::pair<int, int>> edge_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : edges_) pairs.emplace_back(e.v, e.w);
    return pairs;
  }

  std::vector<int> component_of(int start) const {
    std::vector<bool> vis(n_, false);
    std::vector<int> stack{start}, comp;
    vis[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : neighbors(v)) {
        if (!vis[w]) { vis[w] = true; stack.push_back(w); }
      }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
  }

  bool connected() const {
    if (n_ <= 1) return true;
    return static_cast<int>(component_of(0).size()) == n_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// true iff the edge set connects all n vertices (i.e. contains a spanning tree)
bool edges_span(int n, const std::vector<Edge>& edges);

// true iff the edge set is acyclic
bool edges_forest(int n, const std::vector<Edge>& edges);

// canonical adjacency string under an individualization-refinement search;
// equal strings <=> isomorphic graphs
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// an isomorphism perm with perm[a-vertex] = b-vertex, if one exists
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace polyrig
