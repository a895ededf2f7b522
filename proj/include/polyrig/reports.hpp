#pragma once

#include <sstream>

#include "polyrig/combinatorics.hpp"
#include "polyrig/json_io.hpp"
#include "polyrig/synthesis.hpp"
#include "polyrig/towers.hpp"

namespace polyrig {

inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

template <class S>
Json polytope_report(const Polytope<S>& P) {
  Json j;
  j["dim"] = P.dim();
  j["backend"] = ScalarIo<S>::backend_name();
  if constexpr (std::is_same_v<S, double>) j["tolerance"] = P.tol();
  j["class_count"] = P.class_count();
  Json classes = Json::array();
  for (int c = 0; c < P.class_count(); ++c) {
    Json fc;
    fc["name"] = P.class_name(c);
    fc["fhat"] = vec_json(P.classes()[c].fhat);
    classes.push_back(std::move(fc));
  }
  j["classes"] = std::move(classes);
  return j;
}

template <class S>
Json colouring_report(const Framework<S>& fw, const EdgeColouring& col) {
  const Polytope<S>& P = *fw.ball;
  Json j;
  j["colour_count"] = col.colour_count();
  Json global = Json::array();
  for (int c : col.framework_colours) global.push_back(P.class_name(c));
  j["framework_colours"] = std::move(global);
  Json edges = Json::array();
  for (const auto& ec : col.per_edge) {
    Json e;
    e["edge"] = Json::array({ec.e.v, ec.e.w});
    Json cols = Json::array(), membs = Json::array();
    for (const auto& [c, m] : ec.classes) {
      cols.push_back(P.class_name(c));
      membs.push_back(membership_name(m));
    }
    e["colours"] = std::move(cols);
    e["membership"] = std::move(membs);
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  Json pv = Json::array();
  for (const auto& phi : col.per_vertex) {
    Json names = Json::array();
    for (int c : phi) names.push_back(P.class_name(c));
    pv.push_back(std::move(names));
  }
  j["vertex_colours"] = std::move(pv);
  return j;
}

template <class S>
Json matrix_report(const Framework<S>& fw, const RigidityMatrix<S>& m) {
  Json j;
  j["rows"] = m.row_count();
  j["cols"] = m.col_count();
  Json rows = Json::array();
  for (int i = 0; i < m.row_count(); ++i) {
    Json row;
    row["label"] = m.row_name(i, fw.ball->class_name(m.labels[i].class_idx));
    row["entries"] = vec_json(m.rows[i]);
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

template <class S>
std::string matrix_csv(const Framework<S>& fw, const RigidityMatrix<S>& m) {
  std::ostringstream os;
  os << "row";
  for (int v = 0; v < m.n; ++v)
    for (int k = 0; k < m.d; ++k) os << ",p" << v << "_" << k + 1;
  os << "\n";
  for (int i = 0; i < m.row_count(); ++i) {
    os << m.row_name(i, fw.ball->class_name(m.labels[i].class_idx));
    for (const auto& x : m.rows[i]) os << "," << ScalarIo<S>::to_string(x);
    os << "\n";
  }
  return os.str();
}

struct AnalyzeOptions {
  bool emit_matrix = false;
};

template <class S>
Json analyze_report(const Framework<S>& fw, const AnalyzeOptions& opts) {
  const Polytope<S>& P = *fw.ball;
  EdgeColouring col = colour_edges(fw);
  RigidityMatrix<S> m = build_rigidity_matrix(fw, col);
  auto [rank, flex] = rank_and_kernel(m);
  const int d = fw.dim();

  Json j;
  j["polytope"] = polytope_report(P);
  j["framework"] = Json{{"vertex_count", fw.n()}, {"edge_count", fw.graph.edge_count()}};
  j["colouring"] = colouring_report(fw, col);

  auto wp = is_well_positioned(fw, col);
  Json wpj;
  wpj["value"] = wp.ok;
  if (!wp.ok) {
    wpj["witness_edge"] = Json::array({wp.witness->v, wp.witness->w});
    Json wc = Json::array();
    for (int c : wp.witness_classes) wc.push_back(P.class_name(c));
    wpj["witness_colours"] = std::move(wc);
  }
  j["well_positioned"] = std::move(wpj);

  j["rank"] = rank;
  j["nullity"] = static_cast<int>(flex.kernel_basis.size());
  j["trivial_dim"] = flex.trivial_dim;
  j["flex_dim"] = flex.flex_dim;

  Json rig;
  rig["infinitesimally_rigid"] = rank == d * (fw.n() - 1);
  auto minrep = is_minimally_rigid(fw);
  rig["minimally_rigid"] = minrep.minimally_rigid;
  Json removals = Json::array();
  for (const auto& r : minrep.removals) {
    removals.push_back(Json{{"edge", Json::array({r.e.v, r.e.w})},
                            {"rank", r.rank_after},
                            {"flex_dim", r.flex_dim_after}});
  }
  rig["edge_removals"] = std::move(removals);
  rig["tree_criterion"] = tree_verdict_name(tree_criterion(fw, col));
  auto mt = minimal_tree_criterion(fw, col);
  const char* method = mt.method == MinimalTreeResult::Method::TreeIff ? "tree-iff"
                       : mt.method == MinimalTreeResult::Method::TreeSufficient ? "tree-sufficient"
                       : mt.method == MinimalTreeResult::Method::RankFallback ? "rank-fallback"
                                                                              : "none";
  rig["minimal_tree_criterion"] =
      Json{{"verdict", minimal_tree_verdict_name(mt.verdict)}, {"method", method}};
  j["rigidity"] = std::move(rig);

  Json dec = Json::array();
  for (const auto& sub : monochrome_decomposition(fw, col).subgraphs) {
    Json sj;
    sj["colour"] = P.class_name(sub.class_idx);
    Json se = Json::array();
    for (const auto& e : sub.edges) se.push_back(Json::array({e.v, e.w}));
    sj["edges"] = std::move(se);
    sj["spanning"] = sub.spans_all_vertices;
    sj["spanning_tree"] = sub.is_spanning_tree;
    dec.push_back(std::move(sj));
  }
  j["monochrome_subgraphs"] = std::move(dec);

  Json screens;
  {
    auto vs = vertex_colour_screen(fw, col);
    Json vj;
    vj["pass"] = vs.pass;
    if (!vs.pass) {
      vj["vertex"] = *vs.vertex;
      if (vs.witness) {
        vj["witness"] = vec_json(vs.witness->field);
        vj["witness_in_kernel"] = in_kernel(m, vs.witness->field);
        vj["nontrivial"] = vs.witness->nontrivial;
      }
    }
    screens["vertex"] = std::move(vj);
  }
  {
    // every colour subset C with |Phi(G,p) \ C| = d - 1, i.e. each way of
    // excluding d-1 of the framework colours
    Json cuts = Json::array();
    const auto& colours = col.framework_colours;
    const int k = static_cast<int>(colours.size());
    const int excl = d - 1;
    if (excl <= k) {
      std::vector<int> comb(excl);
      for (int i = 0; i < excl; ++i) comb[i] = i;
      while (true) {
        std::vector<int> C;
        for (int i = 0, t = 0; i < k; ++i) {
          if (t < excl && comb[t] == i) { ++t; continue; }
          C.push_back(colours[i]);
        }
        auto cs = cut_screen(fw, col, C);
        Json cj;
        Json cn = Json::array();
        for (int c : C) cn.push_back(P.class_name(c));
        cj["colour_set"] = std::move(cn);
        cj["pass"] = cs.pass;
        if (!cs.pass && cs.witness) {
          cj["witness"] = vec_json(cs.witness->field);
          cj["witness_in_kernel"] = in_kernel(m, cs.witness->field);
        }
        cuts.push_back(std::move(cj));
        if (excl == 0) break;
        int i = excl - 1;
        while (i >= 0 && comb[i] == k - excl + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int t = i + 1; t < excl; ++t) comb[t] = comb[t - 1] + 1;
      }
    }
    screens["cut"] = std::move(cuts);
  }
  j["screens"] = std::move(screens);

  Json sanity;
  sanity["constant_fields_in_kernel"] = constant_fields_in_kernel(m);
  sanity["rank_bound_ok"] = rank <= d * fw.n() - d;
  j["kernel_sanity"] = std::move(sanity);

  if (opts.emit_matrix) {
    j["matrix"] = matrix_report(fw, m);
    Json kb = Json::array();
    for (const auto& u : flex.kernel_basis) kb.push_back(vec_json(u));
    j["kernel_basis"] = std::move(kb);
  }
  return j;
}

template <class S>
Json tower_report_json(const FrameworkFamily<S>& fam, int depth) {
  Json j;
  j["family"] = fam.name;
  j["depth"] = depth;
  auto cert = tower_certificate(fam, depth);
  Json levels = Json::array();
  for (const auto& lvl : cert.levels)
    levels.push_back(Json{{"level", lvl.level}, {"relatively_rigid", lvl.relatively_rigid}});
  j["tower"] = Json{{"levels", std::move(levels)},
                    {"all_relatively_rigid", cert.all_relatively_rigid},
                    {"colour_count", cert.colour_count},
                    {"colour_count_equals_dim", cert.colour_count_equals_dim},
                    {"note", cert.note}};
  auto probe = sequential_rigidity_probe(fam, depth);
  Json plv = Json::array();
  for (const auto& lvl : probe.levels) {
    plv.push_back(Json{{"level", lvl.level},
                       {"rigid", lvl.rigid},
                       {"well_positioned", lvl.well_positioned},
                       {"last_vertex_colour_count", lvl.last_vertex_colour_count}});
  }
  j["probe"] = Json{{"levels", std::move(plv)},
                    {"any_rigid", probe.any_rigid},
                    {"all_rigid", probe.all_rigid}};
  std::string summary;
  if (cert.all_relatively_rigid && !probe.any_rigid)
    summary = "rigid union evidence, no rigid truncation";
  else if (probe.all_rigid)
    summary = "every truncation rigid";
  else
    summary = "mixed verdicts";
  j["summary"] = summary;
  return j;
}

}  // namespace polyrig
