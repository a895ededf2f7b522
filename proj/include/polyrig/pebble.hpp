#pragma once

#include <optional>
#include <vector>

#include "polyrig/graph.hpp"

namespace polyrig {

// (d,d)-sparsity verdict. A Violation carries a subgraph H with
// |E(H)| > d|V(H)| - d.
struct SparsityResult {
  enum class Kind { Tight, SparseOnly, Violation } kind = Kind::SparseOnly;
  // Violation certificate: induced subgraph on these vertices
  std::vector<int> violating_vertices;
  int violating_edge_count = 0;
  // SparseOnly: how far the global count is from d n - d
  int edge_deficit = 0;
};

// Decides |E(H)| <= d|V(H)| - d for all subgraphs via the (k,l) = (d,d)
// pebble game, processing edges in sorted order with smallest-id DFS.
SparsityResult maxwell_count(const Graph& g, int d);

inline bool is_tight(const Graph& g, int d) {
  return maxwell_count(g, d).kind == SparsityResult::Kind::Tight;
}

}  // namespace polyrig
