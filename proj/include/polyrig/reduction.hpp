#pragma once

#include <string>
#include <vector>

#include "polyrig/graph.hpp"

namespace polyrig {

enum class MoveKind { H1, H2, VSplit, VtoK4 };

inline const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::H1: return "H1";
    case MoveKind::H2: return "H2";
    case MoveKind::VSplit: return "VSplit";
    case MoveKind::VtoK4: return "VtoK4";
  }
  return "?";
}

// One allowable graph move, with parameters in the labels of the graph it
// applies to. New vertices always take the next free ids.
//
//   H1:     adjoin vertex n with edges to v1 and v2
//   H2:     remove edge (v1,v2), adjoin vertex n adjacent to v1, v2, v3
//   VSplit: split v1 along edge (v1,v2): adjoin v0 = n with edges (v0,v1),
//           (v0,v2); each w in `reassigned` moves its edge (v1,w) to (v0,w)
//   VtoK4:  replace v1 by a K4 on {v1, n, n+1, n+2}; neighbour
//           reassigned[i] moves its edge to gadget slot slots[i] (1..3)
struct Move {
  MoveKind kind = MoveKind::H1;
  int v1 = -1, v2 = -1, v3 = -1;
  std::vector<int> reassigned;
  std::vector<int> slots;
};

struct MoveSequence {
  std::vector<Move> moves;
  // target_iso[replay label] = vertex id in the original graph
  std::vector<int> target_iso;
};

Graph apply_move(const Graph& g, const Move& m);

// replays the sequence starting from K1
Graph replay_graph(const MoveSequence& seq);

// Backtracking search over inverse moves (degree-2 removal, degree-3
// removal plus edge, K4 collapse, edge contraction), preferring them in
// that order, every intermediate re-verified (2,2)-tight. Returns the
// forward sequence from K1.
MoveSequence reduce_to_k1(const Graph& g, int vertex_cap = 12);

// All (2,2)-tight graphs with up to max_n vertices, one representative per
// isomorphism class, generated as the forward-move closure of K1 with every
// member pebble-verified.
std::vector<Graph> tight_graph_closure(int max_n);

}  // namespace polyrig
