#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyrig/pebble.hpp"
#include "polyrig/rigidity.hpp"

namespace polyrig {

// E_F(G,p) and the spanned subgraph per facet class
struct MonochromeSubgraph {
  int class_idx = 0;
  std::vector<Edge> edges;
  bool spans_all_vertices = false;  // connects every vertex of G
  bool is_forest = false;
  bool is_spanning_tree = false;
};

struct MonochromeDecomposition {
  std::vector<MonochromeSubgraph> subgraphs;  // one per framework colour, canonical order
  int colour_count = 0;
};

template <class S>
MonochromeDecomposition monochrome_decomposition(const Framework<S>& fw,
                                                 const EdgeColouring& col) {
  MonochromeDecomposition out;
  out.colour_count = col.colour_count();
  for (int c : col.framework_colours) {
    MonochromeSubgraph sub;
    sub.class_idx = c;
    for (const auto& ec : col.per_edge)
      if (ec.has_class(c)) sub.edges.push_back(ec.e);
    sub.spans_all_vertices = edges_span(fw.n(), sub.edges);
    sub.is_forest = edges_forest(fw.n(), sub.edges);
    sub.is_spanning_tree = sub.spans_all_vertices && sub.is_forest;
    out.subgraphs.push_back(std::move(sub));
  }
  return out;
}

template <class S>
MonochromeDecomposition monochrome_decomposition(const Framework<S>& fw) {
  return monochrome_decomposition(fw, colour_edges(fw));
}

// A nontrivial flex constructed by a failed necessary-condition screen.
template <class S>
struct FlexWitness {
  Vec<S> field;                // d n vector
  std::vector<int> moved_set;  // joints carrying the nonzero vector
  bool nontrivial = false;     // false only in the single-joint corner case
};

template <class S>
struct ScreenResult {
  bool pass = true;
  std::optional<int> vertex;  // vertex screen: the offending vertex
  std::optional<FlexWitness<S>> witness;
};

// a nonzero vector in the joint kernel of the given facet functionals
template <class S>
std::optional<Vec<S>> common_kernel_vector(const Framework<S>& fw,
                                           const std::vector<int>& classes) {
  std::vector<Vec<S>> funcs;
  for (int c : classes) funcs.push_back(fw.ball->classes()[c].fhat);
  S cut = fw.ball->tol() * std::max<S>(S(1), matrix_max_abs(funcs));
  auto basis = funcs.empty()
                   ? annihilator(std::vector<Vec<S>>{}, fw.dim(), cut)
                   : kernel_basis(rref(funcs, cut));
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

// |Phi(v)| >= d is necessary for rigidity; a violation yields the flex
// that moves only the offending joint
template <class S>
ScreenResult<S> vertex_colour_screen(const Framework<S>& fw, const EdgeColouring& col) {
  const int d = fw.dim();
  for (int v = 0; v < fw.n(); ++v) {
    if (static_cast<int>(col.per_vertex[v].size()) >= d) continue;
    ScreenResult<S> res;
    res.pass = false;
    res.vertex = v;
    auto x = common_kernel_vector(fw, col.per_vertex[v]);
    if (x) {
      FlexWitness<S> wit;
      wit.field.assign(fw.n() * d, S(0));
      for (int k = 0; k < d; ++k) wit.field[v * d + k] = (*x)[k];
      wit.moved_set = {v};
      wit.nontrivial = fw.n() >= 2;
      res.witness = std::move(wit);
    }
    return res;
  }
  return {};
}

template <class S>
ScreenResult<S> vertex_colour_screen(const Framework<S>& fw) {
  return vertex_colour_screen(fw, colour_edges(fw));
}

// The union of the monochrome subgraphs over C must contain a spanning
// tree whenever |Phi(G,p) \ C| < d; otherwise the two-sided flex over a
// separated part is nontrivial.
template <class S>
ScreenResult<S> cut_screen(const Framework<S>& fw, const EdgeColouring& col,
                           const std::vector<int>& colour_set) {
  const int d = fw.dim();
  std::vector<int> rest;
  for (int c : col.framework_colours) {
    if (std::find(colour_set.begin(), colour_set.end(), c) == colour_set.end())
      rest.push_back(c);
  }
  if (static_cast<int>(rest.size()) >= d)
    fail(Errc::BadColourSet, "cut screen requires |Phi(G,p) \\ C| < d");

  std::vector<Edge> union_edges;
  for (const auto& ec : col.per_edge) {
    for (int c : colour_set) {
      if (ec.has_class(c)) { union_edges.push_back(ec.e); break; }
    }
  }
  if (edges_span(fw.n(), union_edges)) return {};

  // partition: one component of the C-union vs the rest
  Graph cu(fw.n(), [&] {
    std::vector<std::pair<int, int>> p;
    for (const auto& e : union_edges) p.emplace_back(e.v, e.w);
    return p;
  }());
  std::vector<int> part = cu.component_of(0);
  std::vector<bool> in_part(fw.n(), false);
  for (int v : part) in_part[v] = true;

  ScreenResult<S> res;
  res.pass = false;
  auto x = common_kernel_vector(fw, rest);
  if (x) {
    FlexWitness<S> wit;
    wit.field.assign(fw.n() * d, S(0));
    for (int v = 0; v < fw.n(); ++v) {
      if (!in_part[v]) continue;
      for (int k = 0; k < d; ++k) wit.field[v * d + k] = (*x)[k];
      wit.moved_set.push_back(v);
    }
    wit.nontrivial = static_cast<int>(part.size()) < fw.n();
    res.witness = std::move(wit);
  }
  return res;
}

enum class TreeVerdict { Rigid, Flexible, NotApplicable };

inline const char* tree_verdict_name(TreeVerdict v) {
  switch (v) {
    case TreeVerdict::Rigid: return "Rigid";
    case TreeVerdict::Flexible: return "Flexible";
    case TreeVerdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

// With exactly d framework colours, rigidity is equivalent to every
// monochrome subgraph containing a spanning tree.
template <class S>
TreeVerdict tree_criterion(const Framework<S>& fw, const EdgeColouring& col) {
  if (col.colour_count() != fw.dim()) return TreeVerdict::NotApplicable;
  MonochromeDecomposition dec = monochrome_decomposition(fw, col);
  for (const auto& sub : dec.subgraphs)
    if (!sub.spans_all_vertices) return TreeVerdict::Flexible;
  return TreeVerdict::Rigid;
}

template <class S>
TreeVerdict tree_criterion(const Framework<S>& fw) {
  return tree_criterion(fw, colour_edges(fw));
}

enum class MinimalTreeVerdict { MinimallyRigid, No, NotApplicable };

inline const char* minimal_tree_verdict_name(MinimalTreeVerdict v) {
  switch (v) {
    case MinimalTreeVerdict::MinimallyRigid: return "MinimallyRigid";
    case MinimalTreeVerdict::No: return "No";
    case MinimalTreeVerdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

struct MinimalTreeResult {
  MinimalTreeVerdict verdict = MinimalTreeVerdict::NotApplicable;
  // which argument decided: the spanning-tree iff (well-positioned),
  // the sufficient spanning-tree direction, or the rank fallback
  enum class Method { TreeIff, TreeSufficient, RankFallback, None } method = Method::None;
};

// Every monochrome subgraph a spanning tree <=> minimally rigid, for
// well-positioned frameworks with d colours. Without well-positionedness
// only the sufficient direction survives; the rest defers to the rank test.
template <class S>
MinimalTreeResult minimal_tree_criterion(const Framework<S>& fw, const EdgeColouring& col) {
  MinimalTreeResult res;
  if (col.colour_count() != fw.dim()) return res;
  MonochromeDecomposition dec = monochrome_decomposition(fw, col);
  bool all_trees = true;
  for (const auto& sub : dec.subgraphs) all_trees = all_trees && sub.is_spanning_tree;
  bool wp = is_well_positioned(fw, col).ok;
  if (wp) {
    res.verdict = all_trees ? MinimalTreeVerdict::MinimallyRigid : MinimalTreeVerdict::No;
    res.method = MinimalTreeResult::Method::TreeIff;
    return res;
  }
  if (all_trees) {
    res.verdict = MinimalTreeVerdict::MinimallyRigid;
    res.method = MinimalTreeResult::Method::TreeSufficient;
    return res;
  }
  res.verdict = is_minimally_rigid(fw).minimally_rigid ? MinimalTreeVerdict::MinimallyRigid
                                                       : MinimalTreeVerdict::No;
  res.method = MinimalTreeResult::Method::RankFallback;
  return res;
}

template <class S>
MinimalTreeResult minimal_tree_criterion(const Framework<S>& fw) {
  return minimal_tree_criterion(fw, colour_edges(fw));
}

}  // namespace polyrig
