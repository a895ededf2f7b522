#include "polyrig/json_io.hpp"

#include <cmath>

#include "polyrig/gallery.hpp"

namespace polyrig {

bool json_scalar_is_rational(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return true;
  if (j.is_string()) return true;  // "p/q"
  if (j.is_number_float()) {
    double x = j.get<double>();
    return x == std::floor(x) && std::abs(x) < 1e15;  // integral-valued literals stay exact
  }
  return false;
}

Rat json_to_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_unsigned()) return Rat(static_cast<long long>(j.get<unsigned long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_float()) {
    double x = j.get<double>();
    if (x == std::floor(x) && std::abs(x) < 1e15) return Rat(static_cast<long long>(x));
    fail(Errc::ValidationError,
         "non-integer literal " + j.dump() + " needs the float backend or a \"p/q\" string");
  }
  fail(Errc::ParseError, "expected a number or \"p/q\" string, got " + j.dump());
}

double json_to_double(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return to_double(rat_from_string(j.get<std::string>()));
  fail(Errc::ParseError, "expected a number or \"p/q\" string, got " + j.dump());
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    fail(Errc::ParseError, "graph needs {\"n\": int, \"edges\": [[v,w],...]}");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(Errc::ParseError, "edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, std::move(edges));
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.v, e.w}));
  j["edges"] = std::move(edges);
  return j;
}

namespace {

bool coords_all_rational(const Json& rows) {
  for (const auto& row : rows)
    for (const auto& c : row)
      if (!json_scalar_is_rational(c)) return false;
  return true;
}

template <class S>
std::vector<Vec<S>> parse_points(const Json& rows);

template <>
std::vector<Vec<Rat>> parse_points<Rat>(const Json& rows) {
  std::vector<Vec<Rat>> out;
  for (const auto& row : rows) {
    Vec<Rat> v;
    for (const auto& c : row) v.push_back(json_to_rat(c));
    out.push_back(std::move(v));
  }
  return out;
}

template <>
std::vector<Vec<double>> parse_points<double>(const Json& rows) {
  std::vector<Vec<double>> out;
  for (const auto& row : rows) {
    Vec<double> v;
    for (const auto& c : row) v.push_back(json_to_double(c));
    out.push_back(std::move(v));
  }
  return out;
}

template <class S>
PolytopeVariant build_polytope(const Json& j, S tol) {
  int dim = j.at("dim").get<int>();
  auto vertices = parse_points<S>(j.at("vertices"));
  std::optional<std::vector<Vec<S>>> polar;
  if (j.contains("polar_override") && !j.at("polar_override").is_null())
    polar = parse_points<S>(j.at("polar_override"));
  return std::make_shared<const Polytope<S>>(
      Polytope<S>::validate(std::move(vertices), dim, std::move(polar), tol));
}

int parse_gallery_int(const std::string& arg, const char* what) {
  try {
    return std::stoi(arg);
  } catch (const std::exception&) {
    fail(Errc::ParseError, std::string("bad ") + what + " parameter: " + arg);
  }
}

template <class S>
SubmodularFn<S> submodular_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("values"))
    fail(Errc::ParseError, "lovasz spec needs {\"d\": int, \"values\": {\"1\": f1, ...}}");
  int d = j.at("d").get<int>();
  if (d < 1 || d > 8) fail(Errc::ValidationError, "submodular ground set capped at 8");
  std::vector<S> values(1u << d, S(0));
  std::vector<bool> seen(1u << d, false);
  seen[0] = true;
  for (const auto& [key, val] : j.at("values").items()) {
    unsigned mask = 0;
    for (char ch : key) {
      if (ch < '1' || ch > '0' + d) fail(Errc::ParseError, "bad subset key: " + key);
      mask |= 1u << (ch - '1');
    }
    if constexpr (std::is_same_v<S, Rat>) values[mask] = json_to_rat(val);
    else values[mask] = json_to_double(val);
    seen[mask] = true;
  }
  for (unsigned m = 1; m < (1u << d); ++m)
    if (!seen[m]) fail(Errc::ParseError, "lovasz spec misses a subset value");
  return SubmodularFn<S>::validate(d, std::move(values));
}

PolytopeVariant gallery_polytope(const std::string& name, const IoOptions& opts) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  const bool want_float = opts.backend == BackendChoice::Float;

  if (kind == "l1" || kind == "linf") {
    int d = parse_gallery_int(arg, kind.c_str());
    if (want_float) {
      auto p = kind == "l1" ? crosspolytope<double>(d) : hypercube<double>(d);
      return std::make_shared<const Polytope<double>>(std::move(p));
    }
    auto p = kind == "l1" ? crosspolytope<Rat>(d) : hypercube<Rat>(d);
    return std::make_shared<const Polytope<Rat>>(std::move(p));
  }
  if (kind == "ngon") {
    if (opts.backend == BackendChoice::Exact)
      fail(Errc::ValidationError, "ngon vertices are irrational; use the float backend");
    return std::make_shared<const Polytope<double>>(
        ngon(parse_gallery_int(arg, "ngon"), opts.tolerance));
  }
  if (kind == "additive") {
    Json base = Json::parse(arg, nullptr, false);
    if (base.is_discarded() || !base.is_array())
      fail(Errc::ParseError, "additive spec needs a JSON array of base vectors");
    if (!want_float && coords_all_rational(base)) {
      return std::make_shared<const Polytope<Rat>>(additive_norm(parse_points<Rat>(base)));
    }
    return std::make_shared<const Polytope<double>>(
        additive_norm(parse_points<double>(base), opts.tolerance));
  }
  if (kind == "lovasz") {
    Json spec = Json::parse(arg, nullptr, false);
    if (spec.is_discarded())
      fail(Errc::ParseError, "lovasz spec needs a JSON object after the colon");
    if (want_float) {
      return std::make_shared<const Polytope<double>>(
          lovasz_norm(submodular_from_json<double>(spec), opts.tolerance));
    }
    return std::make_shared<const Polytope<Rat>>(lovasz_norm(submodular_from_json<Rat>(spec)));
  }
  fail(Errc::ParseError, "unknown gallery polytope: " + name);
}

}  // namespace

PolytopeVariant polytope_from_spec(const Json& spec, const IoOptions& opts) {
  if (spec.is_string()) return gallery_polytope(spec.get<std::string>(), opts);
  if (!spec.is_object() || !spec.contains("dim") || !spec.contains("vertices"))
    fail(Errc::ParseError, "polytope needs {\"dim\": d, \"vertices\": [[...],...]}");

  bool rational = coords_all_rational(spec.at("vertices"));
  if (rational && spec.contains("polar_override") && !spec.at("polar_override").is_null())
    rational = coords_all_rational(spec.at("polar_override"));
  bool use_exact = rational;
  if (opts.backend == BackendChoice::Float) use_exact = false;
  if (opts.backend == BackendChoice::Exact && !rational)
    fail(Errc::ValidationError, "exact backend requested for irrational vertex data");
  if (spec.contains("tolerance") && use_exact && opts.backend != BackendChoice::Exact)
    use_exact = false;  // an explicit tolerance opts into the float backend

  if (use_exact) return build_polytope<Rat>(spec, Rat(0));
  double tol = spec.value("tolerance", opts.tolerance);
  return build_polytope<double>(spec, tol);
}

FrameworkVariant framework_from_json(const Json& j, const IoOptions& opts) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("placement") ||
      !j.contains("polytope"))
    fail(Errc::ParseError,
         "framework needs {\"graph\": {...}, \"placement\": [[...],...], \"polytope\": ...}");
  Graph g = graph_from_json(j.at("graph"));
  IoOptions eff = opts;
  if (opts.backend == BackendChoice::Auto && !coords_all_rational(j.at("placement")))
    eff.backend = BackendChoice::Float;
  PolytopeVariant ball = polytope_from_spec(j.at("polytope"), eff);
  if (std::holds_alternative<PolytopePtr<Rat>>(ball)) {
    if (!coords_all_rational(j.at("placement")))
      fail(Errc::ValidationError,
           "placement coordinates must match the polytope's exact backend");
    return make_framework<Rat>(std::move(g), parse_points<Rat>(j.at("placement")),
                               std::get<PolytopePtr<Rat>>(ball));
  }
  return make_framework<double>(std::move(g), parse_points<double>(j.at("placement")),
                                std::get<PolytopePtr<double>>(ball));
}

MoveSequence moves_from_json(const Json& j) {
  const Json* arr = nullptr;
  MoveSequence seq;
  if (j.is_array()) {
    arr = &j;
  } else if (j.is_object() && j.contains("moves")) {
    arr = &j.at("moves");
    if (j.contains("target_iso")) seq.target_iso = j.at("target_iso").get<std::vector<int>>();
  } else {
    fail(Errc::ParseError, "move sequence must be an array or {\"moves\": [...]}");
  }
  for (const auto& mj : *arr) {
    Move m;
    std::string kind = mj.at("kind").get<std::string>();
    if (kind == "H1") m.kind = MoveKind::H1;
    else if (kind == "H2") m.kind = MoveKind::H2;
    else if (kind == "VSplit") m.kind = MoveKind::VSplit;
    else if (kind == "VtoK4") m.kind = MoveKind::VtoK4;
    else fail(Errc::ParseError, "unknown move kind: " + kind);
    m.v1 = mj.value("v1", -1);
    m.v2 = mj.value("v2", -1);
    m.v3 = mj.value("v3", -1);
    if (mj.contains("reassigned")) m.reassigned = mj.at("reassigned").get<std::vector<int>>();
    if (mj.contains("slots")) m.slots = mj.at("slots").get<std::vector<int>>();
    seq.moves.push_back(std::move(m));
  }
  return seq;
}

Json moves_to_json(const MoveSequence& seq) {
  Json j;
  Json arr = Json::array();
  for (const auto& m : seq.moves) {
    Json mj;
    mj["kind"] = move_kind_name(m.kind);
    mj["v1"] = m.v1;
    if (m.kind != MoveKind::VtoK4) mj["v2"] = m.v2;
    if (m.kind == MoveKind::H2) mj["v3"] = m.v3;
    if (!m.reassigned.empty()) mj["reassigned"] = m.reassigned;
    if (!m.slots.empty()) mj["slots"] = m.slots;
    arr.push_back(std::move(mj));
  }
  j["moves"] = std::move(arr);
  j["target_iso"] = seq.target_iso;
  return j;
}

}  // namespace polyrig
