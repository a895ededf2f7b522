#include "polyrig/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polyrig/reports.hpp"

namespace polyrig {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    // re-parse with exceptions for the position diagnostics
    try {
      (void)Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      fail(Errc::ParseError, what + ": " + e.what());
    }
    fail(Errc::ParseError, what + ": invalid JSON");
  }
  return j;
}

// a polytope argument is an inline JSON object, a path to one, or a
// gallery name like "l1:2"
Json polytope_spec_from_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return parse_json_text(arg, "polytope spec");
  std::ifstream probe(arg);
  if (probe.good()) return parse_json_text(read_file(arg), arg);
  return Json(arg);
}

struct CommonFlags {
  std::string backend = "auto";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out_path;

  IoOptions io() const {
    IoOptions o;
    o.backend = backend == "exact"  ? BackendChoice::Exact
                : backend == "float" ? BackendChoice::Float
                                     : BackendChoice::Auto;
    o.tolerance = tol;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--backend", flags.backend, "scalar backend: exact, float or auto")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  cmd->add_option("--tol", flags.tol, "tolerance for the float backend");
  cmd->add_option("--seed", flags.seed, "seed for randomized searches");
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", flags.out_path, "write the produced framework/report here");
}

Json report_head(const std::string& command, const std::string& input_path,
                 const std::string& input_bytes, const CommonFlags& flags) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["input"] = Json{{"path", input_path}, {"digest", "fnv1a:" + fnv1a_hex(input_bytes)}};
  j["options"] = Json{{"backend", flags.backend}, {"tolerance", flags.tol},
                      {"seed", flags.seed}};
  return j;
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ValidationError, "cannot write " + path);
  out << text;
}

int cmd_analyze(const std::string& path, const CommonFlags& flags, bool emit_matrix,
                std::ostream& out) {
  std::string bytes = read_file(path);
  Json input = parse_json_text(bytes, path);
  FrameworkVariant fw = framework_from_json(input, flags.io());
  AnalyzeOptions aopts;
  aopts.emit_matrix = emit_matrix || flags.format == "csv";
  Json rep = report_head("analyze", path, bytes, flags);
  std::visit(
      [&](const auto& f) {
        if (flags.format == "csv") {
          out << matrix_csv(f, build_rigidity_matrix(f));
          return;
        }
        rep.update(analyze_report(f, aopts));
        out << rep.dump(2) << "\n";
      },
      fw);
  if (!flags.out_path.empty()) write_out(flags.out_path, rep.dump(2) + "\n");
  return 0;
}

int cmd_construct(const std::string& graph_path, const std::string& polytope_arg,
                  const CommonFlags& flags, int vertex_cap, std::ostream& out) {
  std::string bytes = read_file(graph_path);
  Graph g = graph_from_json(parse_json_text(bytes, graph_path));
  Json rep = report_head("construct", graph_path, bytes, flags);

  auto sparsity = maxwell_count(g, 2);
  Json mj;
  mj["kind"] = sparsity.kind == SparsityResult::Kind::Tight       ? "Tight"
               : sparsity.kind == SparsityResult::Kind::SparseOnly ? "SparseOnly"
                                                                   : "Violation";
  if (sparsity.kind == SparsityResult::Kind::Violation) {
    mj["violating_vertices"] = sparsity.violating_vertices;
    mj["violating_edge_count"] = sparsity.violating_edge_count;
  }
  if (sparsity.kind == SparsityResult::Kind::SparseOnly)
    mj["edge_deficit"] = sparsity.edge_deficit;
  rep["maxwell"] = std::move(mj);
  if (sparsity.kind != SparsityResult::Kind::Tight) {
    rep["error"] = "NotTight";
    out << rep.dump(2) << "\n";
    return 2;
  }

  Json pspec = polytope_spec_from_arg(polytope_arg);
  PolytopeVariant ball = polytope_from_spec(pspec, flags.io());
  std::visit(
      [&](const auto& b) {
        using S = typename std::decay_t<decltype(b)>::element_type::ScalarType;
        auto [fw, srep] = synthesize_rigid_placement<S>(g, b, flags.seed, vertex_cap);
        rep["sequence"] = moves_to_json(srep.sequence);
        rep["verification"] =
            Json{{"well_positioned", srep.well_positioned},
                 {"minimally_rigid", srep.minimally_rigid},
                 {"rank", rigidity_rank(fw)}};
        Json fj = framework_to_json(fw, pspec);
        rep["framework"] = fj;
        if (!flags.out_path.empty()) write_out(flags.out_path, fj.dump(2) + "\n");
      },
      ball);
  out << rep.dump(2) << "\n";
  return 0;
}

int cmd_replay(const std::string& moves_path, const std::string& polytope_arg,
               const CommonFlags& flags, std::ostream& out) {
  std::string bytes = read_file(moves_path);
  MoveSequence seq = moves_from_json(parse_json_text(bytes, moves_path));
  Json rep = report_head("replay", moves_path, bytes, flags);
  Json pspec = polytope_spec_from_arg(polytope_arg);
  PolytopeVariant ball = polytope_from_spec(pspec, flags.io());
  std::visit(
      [&](const auto& b) {
        using S = typename std::decay_t<decltype(b)>::element_type::ScalarType;
        Framework<S> fw = replay_moves<S>(seq, b, flags.seed);
        rep["verification"] = Json{{"well_positioned", is_well_positioned(fw).ok},
                                   {"rank", rigidity_rank(fw)},
                                   {"minimally_rigid", is_minimally_rigid(fw).minimally_rigid}};
        Json fj = framework_to_json(fw, pspec);
        rep["framework"] = fj;
        if (!flags.out_path.empty()) write_out(flags.out_path, fj.dump(2) + "\n");
      },
      ball);
  out << rep.dump(2) << "\n";
  return 0;
}

int cmd_tower(const std::string& family_path, int depth_override, const CommonFlags& flags,
              std::ostream& out) {
  std::string bytes = read_file(family_path);
  Json spec = parse_json_text(bytes, family_path);
  if (!spec.is_object() || !spec.contains("family"))
    fail(Errc::ParseError, "family spec needs {\"family\": name, ...}");
  std::string name = spec.at("family").get<std::string>();
  int depth = depth_override > 0 ? depth_override : spec.value("depth", 0);
  if (depth <= 0) fail(Errc::ValidationError, "tower needs a positive --depth");

  Json rep = report_head("tower", family_path, bytes, flags);
  if (name == "zigzag") {
    auto ball = std::make_shared<const Polytope<Rat>>(hypercube<Rat>(2));
    rep.update(tower_report_json(zigzag_family<Rat>(ball), depth));
  } else if (name == "star_octagon") {
    auto ball = std::make_shared<const Polytope<double>>(ngon(8, flags.tol));
    rep.update(tower_report_json(star_octagon_family(ball), depth));
  } else if (name == "constant") {
    if (!spec.contains("framework"))
      fail(Errc::ParseError, "constant family needs an embedded \"framework\"");
    FrameworkVariant fw = framework_from_json(spec.at("framework"), flags.io());
    std::visit([&](const auto& f) { rep.update(tower_report_json(constant_family(f), depth)); },
               fw);
  } else {
    fail(Errc::ParseError, "unknown family: " + name);
  }
  out << rep.dump(2) << "\n";
  if (!flags.out_path.empty()) write_out(flags.out_path, rep.dump(2) + "\n");
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rigidity analysis of bar-joint frameworks under polyhedral norms"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string input_path, polytope_arg;
  bool emit_matrix = false;
  int depth = 0;
  int vertex_cap = 12;

  auto* analyze = app.add_subcommand("analyze", "colouring, rank and rigidity of a framework");
  analyze->add_option("framework", input_path, "framework JSON file")->required();
  analyze->add_flag("--emit-matrix", emit_matrix, "include the rigidity matrix and kernel");
  add_common(analyze, flags);

  auto* construct =
      app.add_subcommand("construct", "synthesize a minimally rigid placement of a tight graph");
  construct->add_option("graph", input_path, "graph JSON file")->required();
  construct->add_option("--polytope", polytope_arg, "gallery name, JSON object or file")
      ->required();
  construct->add_option("--cap", vertex_cap, "vertex cap for the reduction search");
  add_common(construct, flags);

  auto* replay = app.add_subcommand("replay", "replay a move sequence into a placement");
  replay->add_option("moves", input_path, "move sequence JSON file")->required();
  replay->add_option("--polytope", polytope_arg, "gallery name, JSON object or file")
      ->required();
  add_common(replay, flags);

  auto* tower = app.add_subcommand("tower", "finite truncation probes of a framework family");
  tower->add_option("family", input_path, "family spec JSON file")->required();
  tower->add_option("--depth", depth, "number of truncations to probe");
  add_common(tower, flags);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (analyze->parsed()) rc = cmd_analyze(input_path, flags, emit_matrix, out);
    else if (construct->parsed()) rc = cmd_construct(input_path, polytope_arg, flags, vertex_cap, out);
    else if (replay->parsed()) rc = cmd_replay(input_path, polytope_arg, flags, out);
    else if (tower->parsed()) rc = cmd_tower(input_path, depth, flags, out);
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    rc = e.is_validation() ? 2 : 3;
  } catch (const nlohmann::json::exception& e) {
    err << "error [ParseError]: " << e.what() << "\n";
    rc = 2;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            started);
  err << "elapsed: " << elapsed.count() << " ms\n";
  return rc;
}

}  // namespace polyrig
