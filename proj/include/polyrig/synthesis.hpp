#pragma once

#include <utility>
#include <vector>

#include "polyrig/moves.hpp"

namespace polyrig {

template <class S>
Framework<S> jitter_joint_preserving_colours(const Framework<S>& fw, int v, std::uint64_t seed);

// Forward replay of a move sequence with geometric placements. Colour
// choices are made per move: the first choice that admits a placement
// wins, so the result is deterministic for a fixed seed.
template <class S>
Framework<S> replay_moves(const MoveSequence& seq, PolytopePtr<S> ball, std::uint64_t seed) {
  Framework<S> fw = make_framework<S>(Graph(1, {}), {Vec<S>(2, S(0))}, ball);
  const int classes = ball->class_count();
  int step = 0;
  for (const auto& m : seq.moves) {
    ++step;
    switch (m.kind) {
      case MoveKind::H1: {
        auto attempt = [&](Framework<S>& base) {
          for (int c1 = 0; c1 < classes; ++c1) {
            for (int c2 = 0; c2 < classes; ++c2) {
              if (c1 == c2) continue;
              try {
                fw = henneberg1(base, m.v1, m.v2, c1, c2);
                return true;
              } catch (const Error& e) {
                if (e.code() != Errc::EmptyConeIntersection) throw;
              }
            }
          }
          return false;
        };
        bool done = attempt(fw);
        if (!done) {
          // the two base joints can coincide (a legal non-edge overlap);
          // a colour-preserving nudge separates them
          Framework<S> moved = jitter_joint_preserving_colours(fw, m.v1, seed + step);
          done = attempt(moved);
          if (!done) {
            moved = jitter_joint_preserving_colours(fw, m.v2, seed + step + 1);
            done = attempt(moved);
          }
        }
        if (!done) fail(Errc::EmptyConeIntersection, "H1 found no colour pair at step " +
                                                         std::to_string(step));
        break;
      }
      case MoveKind::H2: {
        bool done = false;
        Error last(Errc::EmptyIntersection, "H2 found no colour at step " + std::to_string(step));
        for (int c2 = 0; c2 < classes && !done; ++c2) {
          try {
            fw = henneberg2(fw, Edge(m.v1, m.v2), m.v3, c2);
            done = true;
          } catch (const Error& e) {
            if (e.code() != Errc::EmptyIntersection && e.code() != Errc::ValidationError) throw;
            if (e.code() == Errc::EmptyIntersection) last = e;
          }
        }
        // the third joint can sit exactly on the split line; nudge it
        // within its colour-preserving neighbourhood and retry
        for (int round = 0; round < 8 && !done; ++round) {
          Framework<S> moved =
              jitter_joint_preserving_colours(fw, m.v3, mix_key(seed, step, round));
          for (int c2 = 0; c2 < classes && !done; ++c2) {
            try {
              fw = henneberg2(moved, Edge(m.v1, m.v2), m.v3, c2);
              done = true;
            } catch (const Error& e) {
              if (e.code() != Errc::EmptyIntersection && e.code() != Errc::ValidationError) throw;
            }
          }
        }
        if (!done) throw last;
        break;
      }
      case MoveKind::VSplit: {
        bool done = false;
        for (int c2 = 0; c2 < classes && !done; ++c2) {
          try {
            fw = vertex_split(fw, m.v1, m.v2, m.reassigned, c2);
            done = true;
          } catch (const Error& e) {
            if (e.code() != Errc::RadiusSearchFailed && e.code() != Errc::ValidationError) throw;
          }
        }
        if (!done)
          fail(Errc::RadiusSearchFailed, "VSplit found no colour at step " + std::to_string(step));
        break;
      }
      case MoveKind::VtoK4: {
        fw = vertex_to_k4(fw, m.v1, m.reassigned, m.slots);
        break;
      }
    }
  }
  return fw;
}

// moves one joint by a small colour-preserving jitter (the colouring is
// locally constant around a well-positioned placement)
template <class S>
Framework<S> jitter_joint_preserving_colours(const Framework<S>& fw, int v, std::uint64_t seed) {
  EdgeColouring before = colour_edges(fw);
  S radius = frac<S>(1, 8);
  for (int attempt = 0; attempt < 64; ++attempt, radius /= S(2)) {
    SplitMix64 rng(mix_key(seed, 0x6a69747465724aULL, v, attempt));
    Vec<S> u(fw.dim(), S(0));
    bool nonzero = false;
    for (int k = 0; k < fw.dim(); ++k) {
      long long t = rng.range(-16, 16);
      u[k] = S(t);
      nonzero = nonzero || t != 0;
    }
    if (!nonzero) u[0] = S(1);
    std::vector<Vec<S>> pl = fw.placement;
    pl[v] = add(pl[v], scaled(u, radius / std::max<S>(S(1), fw.ball->gauge(u))));
    Framework<S> cand{fw.graph, std::move(pl), fw.ball};
    bool edges_ok = true;
    for (const auto& e : fw.graph.edges())
      if (is_zero_vec(cand.edge_vector(e))) edges_ok = false;
    if (!edges_ok) continue;
    EdgeColouring after = colour_edges(cand);
    bool same = true;
    for (std::size_t i = 0; i < before.per_edge.size() && same; ++i) {
      if (before.per_edge[i].classes != after.per_edge[i].classes) same = false;
    }
    if (same) return cand;
  }
  fail(Errc::PerturbationFailed, "no colour-preserving jitter found");
}

struct SynthesisReport {
  MoveSequence sequence;
  bool minimally_rigid = false;
  bool well_positioned = false;
};

// The full planar pipeline: reduce the (2,2)-tight graph to K1 by inverse
// moves, then replay the forward moves geometrically. The output placement
// is well-positioned and minimally infinitesimally rigid.
template <class S>
std::pair<Framework<S>, SynthesisReport> synthesize_rigid_placement(const Graph& g,
                                                                    PolytopePtr<S> ball,
                                                                    std::uint64_t seed,
                                                                    int vertex_cap = 12) {
  if (ball->dim() != 2) fail(Errc::DimensionUnsupported, "placement synthesis is planar");
  MoveSequence seq = reduce_to_k1(g, vertex_cap);
  Framework<S> replayed = replay_moves<S>(seq, ball, seed);

  // rename the replayed joints back to the caller's vertex ids
  std::vector<Vec<S>> placement(g.n());
  for (int replay_label = 0; replay_label < g.n(); ++replay_label)
    placement[seq.target_iso[replay_label]] = replayed.placement[replay_label];
  Framework<S> out = make_framework<S>(g, std::move(placement), ball);

  SynthesisReport rep;
  rep.sequence = std::move(seq);
  rep.well_positioned = is_well_positioned(out).ok;
  rep.minimally_rigid = is_minimally_rigid(out).minimally_rigid;
  if (!rep.well_positioned || !rep.minimally_rigid)
    fail(Errc::SearchFailed, "synthesized placement failed verification");
  return {std::move(out), std::move(rep)};
}

}  // namespace polyrig
