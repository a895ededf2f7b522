#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "polyrig/framework.hpp"
#include "polyrig/reduction.hpp"

namespace polyrig {

using Json = nlohmann::ordered_json;

using PolytopeVariant = std::variant<PolytopePtr<Rat>, PolytopePtr<double>>;
using FrameworkVariant = std::variant<Framework<Rat>, Framework<double>>;

enum class BackendChoice { Auto, Exact, Float };

struct IoOptions {
  BackendChoice backend = BackendChoice::Auto;
  double tolerance = 1e-9;
};

inline Json scalar_json(const Rat& r) {
  if (denominator(r) == 1 && abs_value(r) <= Rat(1LL << 53)) {
    return Json(static_cast<long long>(numerator(r).template convert_to<long long>()));
  }
  return Json(rat_to_string(r));
}

inline Json scalar_json(double x) { return Json(x); }

template <class S>
Json vec_json(const Vec<S>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

// ---------------------------------------------------------------------------
// parsing

// a JSON number or "p/q" string; exact integers and rational strings stay
// exact, everything else demands the float backend
bool json_scalar_is_rational(const Json& j);
Rat json_to_rat(const Json& j);
double json_to_double(const Json& j);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

// polytope from a JSON object or a gallery name ("l1:2", "linf:3",
// "ngon:8", "additive:[[...]]", "lovasz:{...}")
PolytopeVariant polytope_from_spec(const Json& spec, const IoOptions& opts);

FrameworkVariant framework_from_json(const Json& j, const IoOptions& opts);
template <class S>
Json framework_to_json(const Framework<S>& fw, const Json& polytope_spec);

MoveSequence moves_from_json(const Json& j);
Json moves_to_json(const MoveSequence& seq);

// ---------------------------------------------------------------------------

template <class S>
Json framework_to_json(const Framework<S>& fw, const Json& polytope_spec) {
  Json j;
  j["graph"]["n"] = fw.n();
  Json edges = Json::array();
  for (const auto& e : fw.graph.edges()) edges.push_back(Json::array({e.v, e.w}));
  j["graph"]["edges"] = std::move(edges);
  Json pl = Json::array();
  for (const auto& p : fw.placement) pl.push_back(vec_json(p));
  j["placement"] = std::move(pl);
  j["polytope"] = polytope_spec;
  return j;
}

template <class S>
Json polytope_to_json(const Polytope<S>& P) {
  Json j;
  j["dim"] = P.dim();
  Json verts = Json::array();
  for (const auto& v : P.vertices()) verts.push_back(vec_json(v));
  j["vertices"] = std::move(verts);
  Json polar = Json::array();
  for (const auto& fc : P.classes()) polar.push_back(vec_json(fc.fhat));
  j["polar_override"] = std::move(polar);
  if constexpr (std::is_same_v<S, double>) j["tolerance"] = P.tol();
  return j;
}

}  // namespace polyrig
