#include "polyrig/reduction.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "polyrig/pebble.hpp"

namespace polyrig {

Graph apply_move(const Graph& g, const Move& m) {
  const int n = g.n();
  switch (m.kind) {
    case MoveKind::H1: {
      if (m.v1 == m.v2 || m.v1 < 0 || m.v2 < 0 || m.v1 >= n || m.v2 >= n)
        fail(Errc::ValidationError, "H1 needs two distinct existing vertices");
      return g.with_vertex().with_edge(n, m.v1).with_edge(n, m.v2);
    }
    case MoveKind::H2: {
      if (!g.has_edge(m.v1, m.v2)) fail(Errc::ValidationError, "H2 needs an existing edge");
      if (m.v3 == m.v1 || m.v3 == m.v2 || m.v3 < 0 || m.v3 >= n)
        fail(Errc::ValidationError, "H2 needs a third distinct vertex");
      return g.without_edge(Edge(m.v1, m.v2))
          .with_vertex()
          .with_edge(n, m.v1)
          .with_edge(n, m.v2)
          .with_edge(n, m.v3);
    }
    case MoveKind::VSplit: {
      if (!g.has_edge(m.v1, m.v2)) fail(Errc::ValidationError, "VSplit needs the anchor edge");
      Graph out = g.with_vertex().with_edge(n, m.v1).with_edge(n, m.v2);
      for (int w : m.reassigned) {
        if (w == m.v2 || !g.has_edge(m.v1, w))
          fail(Errc::ValidationError, "VSplit reassigns only other edges at the split vertex");
        out = out.without_edge(Edge(m.v1, w)).with_edge(n, w);
      }
      return out;
    }
    case MoveKind::VtoK4: {
      if (m.v1 < 0 || m.v1 >= n) fail(Errc::ValidationError, "VtoK4 needs an existing vertex");
      Graph out = g.with_vertex().with_vertex().with_vertex();
      const int slots[4] = {m.v1, n, n + 1, n + 2};
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) out = out.with_edge(slots[a], slots[b]);
      if (m.reassigned.size() != m.slots.size())
        fail(Errc::ValidationError, "VtoK4 reassignment arity mismatch");
      for (std::size_t i = 0; i < m.reassigned.size(); ++i) {
        int w = m.reassigned[i];
        int s = m.slots[i];
        if (s < 1 || s > 3) fail(Errc::ValidationError, "VtoK4 slot must name a gadget vertex");
        if (!g.has_edge(m.v1, w))
          fail(Errc::ValidationError, "VtoK4 reassigns only edges at the replaced vertex");
        out = out.without_edge(Edge(m.v1, w)).with_edge(slots[s], w);
      }
      return out;
    }
  }
  fail(Errc::ValidationError, "unknown move kind");
}

Graph replay_graph(const MoveSequence& seq) {
  Graph g(1, {});
  for (const auto& m : seq.moves) g = apply_move(g, m);
  return g;
}

namespace {

// permutation sending the listed vertices to the top labels (order
// preserved elsewhere)
std::vector<int> to_top_perm(int n, std::vector<int> victims) {
  std::sort(victims.begin(), victims.end());
  std::vector<int> perm(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (std::binary_search(victims.begin(), victims.end(), v)) continue;
    perm[v] = next++;
  }
  for (std::size_t i = 0; i < victims.size(); ++i)
    perm[victims[i]] = n - static_cast<int>(victims.size()) + static_cast<int>(i);
  return perm;
}

struct SearchCtx {
  std::set<std::string> dead;
  long long budget = 2'000'000;  // node cap for the backtracking search
  Graph stuck;
  bool have_stuck = false;
};

struct StepResult {
  Move move;                 // parameters in the labels of the shrunken graph
  Graph shrunk;
  std::vector<int> perm;     // old label -> relabeled (pre-shrink) label
  int created = 1;           // vertices the forward move recreates
};

// rho maps the labels of g to the labels of the replayed graph; on
// success the moves rebuild g up to that relabeling
bool reduce_rec(const Graph& g, SearchCtx& ctx, std::vector<Move>& out, std::vector<int>& rho);

bool try_step(const Graph& g, const StepResult& step, SearchCtx& ctx, std::vector<Move>& out,
              std::vector<int>& rho) {
  if (!is_tight(step.shrunk, 2)) return false;
  std::vector<Move> sub;
  std::vector<int> sub_rho;
  if (!reduce_rec(step.shrunk, ctx, sub, sub_rho)) return false;
  // translate the move parameters into replay labels
  Move mv = step.move;
  auto tr = [&](int v) { return v < 0 ? v : sub_rho[v]; };
  mv.v1 = tr(mv.v1);
  mv.v2 = tr(mv.v2);
  mv.v3 = tr(mv.v3);
  for (auto& w : mv.reassigned) w = tr(w);
  sub.push_back(mv);
  // replay labels: shrunk vertices keep sub_rho, recreated ones take the
  // next ids in creation order
  const int base = step.shrunk.n();
  rho.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    int relabeled = step.perm[v];
    rho[v] = relabeled < base ? sub_rho[relabeled] : base + (relabeled - base);
  }
  out = std::move(sub);
  return true;
}

bool reduce_rec(const Graph& g, SearchCtx& ctx, std::vector<Move>& out, std::vector<int>& rho) {
  const int n = g.n();
  if (n == 1) {
    out.clear();
    rho = {0};
    return true;
  }
  if (ctx.budget-- <= 0) fail(Errc::SearchExhausted, "inverse-move search budget exhausted");
  std::string key = canonical_form(g);
  if (ctx.dead.count(key)) return false;

  std::vector<StepResult> steps;

  // inverse H1: drop a degree-2 vertex
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() != 2) continue;
    auto perm = to_top_perm(n, {v});
    Graph relab = g.relabeled(perm);
    StepResult st;
    st.move.kind = MoveKind::H1;
    st.move.v1 = perm[nb[0]];
    st.move.v2 = perm[nb[1]];
    st.shrunk = relab.without_vertex(n - 1);
    st.perm = perm;
    steps.push_back(std::move(st));
  }

  // inverse H2: drop a degree-3 vertex, restore one missing edge among its
  // neighbours
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() != 3) continue;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        int k = 3 - i - j;
        auto perm = to_top_perm(n, {v});
        Graph relab = g.relabeled(perm);
        StepResult st;
        st.move.kind = MoveKind::H2;
        st.move.v1 = perm[nb[i]];
        st.move.v2 = perm[nb[j]];
        st.move.v3 = perm[nb[k]];
        st.shrunk = relab.without_vertex(n - 1).with_edge(perm[nb[i]], perm[nb[j]]);
        st.perm = perm;
        steps.push_back(std::move(st));
      }
    }
  }

  // inverse VtoK4: collapse a K4 whose members share no outside neighbour
  if (n >= 4) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (!g.has_edge(a, b)) continue;
        for (int c = b + 1; c < n; ++c) {
          if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
          for (int d = c + 1; d < n; ++d) {
            if (!g.has_edge(a, d) || !g.has_edge(b, d) || !g.has_edge(c, d)) continue;
            const int quad[4] = {a, b, c, d};
            bool clean = true;
            for (int w = 0; w < n && clean; ++w) {
              if (w == a || w == b || w == c || w == d) continue;
              int cnt = 0;
              for (int q : quad) cnt += g.has_edge(w, q) ? 1 : 0;
              if (cnt > 1) clean = false;
            }
            if (!clean) continue;
            auto perm = to_top_perm(n, {b, c, d});
            Graph relab = g.relabeled(perm);
            StepResult st;
            st.move.kind = MoveKind::VtoK4;
            st.move.v1 = perm[a];
            st.created = 3;
            // collapse: outside edges of b, c, d reattach to a
            std::vector<std::pair<int, int>> pairs;
            for (const auto& e : relab.edges()) {
              bool ev = e.v >= n - 3, ew = e.w >= n - 3;
              if (ev && ew) continue;
              if (e.v == perm[a] && ew) continue;
              if (e.w == perm[a] && ev) continue;
              if (ew) {
                pairs.emplace_back(e.v, perm[a]);
                st.move.reassigned.push_back(e.v);
                st.move.slots.push_back(e.w - (n - 3) + 1);
              } else if (ev) {
                pairs.emplace_back(perm[a], e.w);
                st.move.reassigned.push_back(e.w);
                st.move.slots.push_back(e.v - (n - 3) + 1);
              } else {
                pairs.emplace_back(e.v, e.w);
              }
            }
            st.shrunk = Graph(n - 3, std::move(pairs));
            st.perm = perm;
            steps.push_back(std::move(st));
          }
        }
      }
  }

  // inverse VSplit: contract an edge whose endpoints share exactly one
  // neighbour
  for (const auto& e : g.edges()) {
    for (int dir = 0; dir < 2; ++dir) {
      int gone = dir == 0 ? e.v : e.w;  // contracted into `kept`
      int kept = dir == 0 ? e.w : e.v;
      auto nb_gone = g.neighbors(gone);
      auto nb_kept = g.neighbors(kept);
      std::vector<int> common;
      for (int x : nb_gone)
        if (std::find(nb_kept.begin(), nb_kept.end(), x) != nb_kept.end()) common.push_back(x);
      if (common.size() != 1) continue;
      auto perm = to_top_perm(n, {gone});
      Graph relab = g.relabeled(perm);
      StepResult st;
      st.move.kind = MoveKind::VSplit;
      st.move.v1 = perm[kept];
      st.move.v2 = perm[common[0]];
      std::vector<std::pair<int, int>> pairs;
      for (const auto& f : relab.edges()) {
        if (f.w < n - 1) { pairs.emplace_back(f.v, f.w); continue; }
        // f.w == n-1 is the contracted vertex (largest label)
        if (f.v == perm[kept] || f.v == perm[common[0]]) continue;
        pairs.emplace_back(f.v, perm[kept]);
        st.move.reassigned.push_back(f.v);
      }
      // (kept, common) edge survives from the original edge set
      st.shrunk = Graph(n - 1, std::move(pairs));
      st.perm = perm;
      steps.push_back(std::move(st));
    }
  }

  for (auto& st : steps) {
    if (try_step(g, st, ctx, out, rho)) return true;
  }
  if (!ctx.have_stuck || g.n() < ctx.stuck.n()) {
    ctx.stuck = g;
    ctx.have_stuck = true;
  }
  ctx.dead.insert(std::move(key));
  return false;
}

}  // namespace

MoveSequence reduce_to_k1(const Graph& g, int vertex_cap) {
  auto sparsity = maxwell_count(g, 2);
  if (sparsity.kind != SparsityResult::Kind::Tight)
    fail(Errc::NotTight, "graph is not (2,2)-tight");
  if (g.n() > vertex_cap)
    fail(Errc::ValidationError, "graph exceeds the reduction vertex cap of " +
                                    std::to_string(vertex_cap));
  SearchCtx ctx;
  std::vector<Move> moves;
  std::vector<int> rho;
  if (!reduce_rec(g, ctx, moves, rho)) {
    std::string msg = "no inverse-move reduction found; smallest stuck intermediate has " +
                      std::to_string(ctx.have_stuck ? ctx.stuck.n() : g.n()) + " vertices";
    fail(Errc::SearchExhausted, msg);
  }
  MoveSequence seq;
  seq.moves = std::move(moves);
  // rho: g label -> replay label; target_iso inverts it
  seq.target_iso.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) seq.target_iso[rho[v]] = v;
  return seq;
}

std::vector<Graph> tight_graph_closure(int max_n) {
  std::map<std::string, Graph> seen;
  std::vector<Graph> frontier;
  Graph k1(1, {});
  seen[canonical_form(k1)] = k1;
  frontier.push_back(k1);
  auto offer = [&](const Graph& g) {
    if (g.n() > max_n) return;
    if (!is_tight(g, 2)) return;
    std::string key = canonical_form(g);
    if (seen.count(key)) return;
    seen[key] = g;
    frontier.push_back(g);
  };
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Graph g = frontier[head];
    const int n = g.n();
    // H1 over all vertex pairs
    if (n + 1 <= max_n) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          Move m{MoveKind::H1, a, b, -1, {}, {}};
          offer(apply_move(g, m));
        }
      // H2 over all (edge, third vertex)
      for (const auto& e : g.edges())
        for (int w = 0; w < n; ++w) {
          if (w == e.v || w == e.w) continue;
          Move m{MoveKind::H2, e.v, e.w, w, {}, {}};
          offer(apply_move(g, m));
        }
      // VSplit over all (vertex, anchor edge, reassigned subset)
      for (int v1 = 0; v1 < n; ++v1) {
        auto nb = g.neighbors(v1);
        for (int v2 : nb) {
          std::vector<int> others;
          for (int w : nb)
            if (w != v2) others.push_back(w);
          const int m2 = static_cast<int>(others.size());
          for (unsigned mask = 0; mask < (1u << m2); ++mask) {
            Move m{MoveKind::VSplit, v1, v2, -1, {}, {}};
            for (int i = 0; i < m2; ++i)
              if (mask & (1u << i)) m.reassigned.push_back(others[i]);
            offer(apply_move(g, m));
          }
        }
      }
    }
    // VtoK4 over all vertices and slot assignments
    if (n + 3 <= max_n) {
      for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        const int deg = static_cast<int>(nb.size());
        long long total = 1;
        for (int i = 0; i < deg; ++i) total *= 4;
        for (long long code = 0; code < total; ++code) {
          Move m{MoveKind::VtoK4, v, -1, -1, {}, {}};
          long long c = code;
          for (int i = 0; i < deg; ++i) {
            int slot = static_cast<int>(c % 4);
            c /= 4;
            if (slot > 0) {
              m.reassigned.push_back(nb[i]);
              m.slots.push_back(slot);
            }
          }
          offer(apply_move(g, m));
        }
      }
    }
  }
  std::vector<Graph> out;
  for (auto& [k, g] : seen) out.push_back(g);
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.edge_count() < b.edge_count();
  });
  return out;
}

}  // namespace polyrig
