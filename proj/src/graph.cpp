#include "polyrig/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace polyrig {

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool edges_span(int n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  DisjointSet ds(n);
  int merges = 0;
  for (const auto& e : edges)
    if (ds.unite(e.v, e.w)) ++merges;
  return merges == n - 1;
}

bool edges_forest(int n, const std::vector<Edge>& edges) {
  DisjointSet ds(n);
  for (const auto& e : edges)
    if (!ds.unite(e.v, e.w)) return false;
  return true;
}

namespace {

// Colour refinement: split vertex classes by the multiset of neighbour
// colours until stable.
std::vector<int> refine_colours(const Graph& g, std::vector<int> colour) {
  const int n = g.n();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.v].push_back(e.w);
    adj[e.w].push_back(e.v);
  }
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int w : adj[v]) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {colour[v], std::move(nb)};
    }
    std::map<std::pair<int, std::vector<int>>, int> ranks;
    for (int v = 0; v < n; ++v) ranks[sig[v]] = 0;
    int next = 0;
    for (auto& [k, r] : ranks) r = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = ranks[sig[v]];
    if (fresh == colour) return colour;
    colour = std::move(fresh);
  }
}

std::string adjacency_string(const Graph& g, const std::vector<int>& order) {
  // order[i] = vertex placed at position i
  const int n = g.n();
  std::string s;
  s.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.push_back(g.has_edge(order[i], order[j]) ? '1' : '0');
  return s;
}

void canon_search(const Graph& g, std::vector<int> colour, std::string& best, bool& have_best) {
  const int n = g.n();
  colour = refine_colours(g, colour);
  // find the first colour class with more than one vertex
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  int split_colour = -1;
  for (auto& [c, vs] : cells) {
    if (vs.size() > 1) { split_colour = c; break; }
  }
  if (split_colour < 0) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[colour[v]] = v;  // colours are 0..n-1 when discrete
    std::string s = adjacency_string(g, order);
    if (!have_best || s < best) { best = std::move(s); have_best = true; }
    return;
  }
  for (int v : cells[split_colour]) {
    std::vector<int> next(colour);
    for (int u = 0; u < n; ++u)
      if (next[u] >= split_colour && u != v) next[u] += 1;
    // v keeps split_colour, everyone at or above shifts up: v is individualized
    canon_search(g, std::move(next), best, have_best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g) {
  std::string best;
  bool have_best = false;
  canon_search(g, std::vector<int>(g.n(), 0), best, have_best);
  return std::to_string(g.n()) + ":" + best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<bool>& used, int v) {
  const int n = a.n();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v; ++u) {
      if (a.has_edge(u, v) != b.has_edge(map[u], w)) { ok = false; break; }
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_isomorphism(a, b, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<int> map(a.n(), -1);
  std::vector<bool> used(a.n(), false);
  if (extend_isomorphism(a, b, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace polyrig
