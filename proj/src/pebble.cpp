#include "polyrig/pebble.hpp"

#include <algorithm>

namespace polyrig {

namespace {

struct PebbleState {
  int n;
  int k;
  std::vector<int> pebbles;
  std::vector<std::vector<int>> out;  // oriented processed edges

  PebbleState(int n_, int k_) : n(n_), k(k_), pebbles(n_, k_), out(n_) {}

  // move one pebble to root by reversing a path to a pebbled vertex;
  // vertices in `avoid` may not give up pebbles
  bool pull_pebble(int root, int avoid) {
    std::vector<int> prev(n, -2);
    std::vector<int> stack{root};
    prev[root] = -1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v != root && v != avoid && pebbles[v] > 0) {
        pebbles[v] -= 1;
        // reverse the path root -> v
        int cur = v;
        while (prev[cur] != -1) {
          int parent = prev[cur];
          out[parent].erase(std::find(out[parent].begin(), out[parent].end(), cur));
          out[cur].push_back(parent);
          std::sort(out[cur].begin(), out[cur].end());
          cur = parent;
        }
        pebbles[root] += 1;
        return true;
      }
      std::vector<int> nb = out[v];
      std::sort(nb.rbegin(), nb.rend());  // stack => smallest id explored first
      for (int w : nb) {
        if (prev[w] == -2) { prev[w] = v; stack.push_back(w); }
      }
    }
    return false;
  }

  std::vector<int> reachable(int a, int b) const {
    std::vector<bool> vis(n, false);
    std::vector<int> stack{a, b};
    vis[a] = vis[b] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : out[v]) {
        if (!vis[w]) { vis[w] = true; stack.push_back(w); }
      }
    }
    std::vector<int> r;
    for (int v = 0; v < n; ++v)
      if (vis[v]) r.push_back(v);
    return r;
  }
};

}  // namespace

SparsityResult maxwell_count(const Graph& g, int d) {
  // (k,l) = (d,d): inserting an edge needs d+1 pebbles on its endpoints
  const int need = d + 1;
  PebbleState st(g.n(), d);
  std::vector<Edge> inserted;
  for (const auto& e : g.edges()) {
    while (st.pebbles[e.v] + st.pebbles[e.w] < need) {
      bool moved = st.pull_pebble(e.v, e.w);
      if (!moved) moved = st.pull_pebble(e.w, e.v);
      if (!moved) break;
    }
    if (st.pebbles[e.v] + st.pebbles[e.w] < need) {
      SparsityResult res;
      res.kind = SparsityResult::Kind::Violation;
      res.violating_vertices = st.reachable(e.v, e.w);
      int count = 1;  // the failing edge
      for (const auto& f : inserted) {
        bool iv = std::binary_search(res.violating_vertices.begin(),
                                     res.violating_vertices.end(), f.v);
        bool iw = std::binary_search(res.violating_vertices.begin(),
                                     res.violating_vertices.end(), f.w);
        if (iv && iw) ++count;
      }
      res.violating_edge_count = count;
      return res;
    }
    // orient from an endpoint that still holds a pebble
    int tail = st.pebbles[e.v] > 0 ? e.v : e.w;
    int head = tail == e.v ? e.w : e.v;
    st.pebbles[tail] -= 1;
    st.out[tail].push_back(head);
    std::sort(st.out[tail].begin(), st.out[tail].end());
    inserted.push_back(e);
  }
  SparsityResult res;
  if (g.edge_count() == d * g.n() - d) {
    res.kind = SparsityResult::Kind::Tight;
  } else {
    res.kind = SparsityResult::Kind::SparseOnly;
    res.edge_deficit = d * g.n() - d - g.edge_count();
  }
  return res;
}

}  // namespace polyrig
