#include "ptw/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "ptw/bridges.hpp"
#include "ptw/embedding.hpp"
#include "ptw/errors.hpp"
#include "ptw/incidence.hpp"
#include "ptw/io.hpp"
#include "ptw/matchings.hpp"
#include "ptw/measurement.hpp"
#include "ptw/moves.hpp"

namespace ptw::cli {
namespace {

using io::Json;

struct Report {
  std::string command;
  Json inputs = Json::object();
  bool ok = true;
  Json payload = Json::object();
  std::optional<std::string> text;  // replaces the JSON report when set
};

std::string base_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

Json perm_json(const AffinePerm& pi) { return pi.values(); }

Json subsets_json(const std::vector<Subset>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(io::subset_to_json(s));
  return out;
}

Json necklace_json(const Necklace& nk) { return subsets_json(nk.sets); }

EdgeWeighting weights_arg(const std::string& arg, const PlabicGraph& g) {
  if (arg == "unit") return unit_weighting(g);
  return io::load_weights(arg, g);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

std::vector<Subset> sorted_labels(const std::vector<Subset>& labels, const std::vector<int>& faces) {
  std::vector<Subset> out;
  for (int f : faces) out.push_back(labels[f]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> sorted_sets(const Json& j) {
  std::vector<Subset> out;
  for (const auto& s : j) out.push_back(io::subset_from_json(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::string dot_graph(const PlabicGraph& g) {
  std::ostringstream out;
  out << "graph plabic {\n  node [style=filled];\n";
  for (int i = 1; i <= g.n; ++i) out << "  b" << i << " [shape=plaintext, label=\"" << i << "\"];\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    out << "  \"" << g.vertex_ids[v] << "\" [shape=circle, fillcolor="
        << (g.colors[v] == Color::White ? "white" : "black") << ", fontcolor="
        << (g.colors[v] == Color::White ? "black" : "white") << "];\n";
  }
  auto name = [&](int node) {
    return PlabicGraph::is_boundary(node) ? "b" + std::to_string(-node) : "\"" + g.vertex_ids[node] + "\"";
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    out << "  " << name(g.ends[e][0]) << " -- " << name(g.ends[e][1]) << " [label=\"" << g.edge_ids[e] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

Report inspect(const std::string& path, bool dot) {
  Report r{"inspect"};
  r.inputs["graph"] = base_name(path);
  const Json doc = io::load_json_file(path);
  const PlabicGraph g = io::graph_from_json(doc);
  if (dot) {
    r.text = dot_graph(g);
    return r;
  }
  const Embedding emb(g);
  const AffinePerm pi = emb.trip_permutation();
  const int n = g.n;
  const int k = pi.k();
  const int len = length(pi);
  const Necklace forward = necklace_from_perm(pi, Direction::Forward);
  const Positroid positroid = positroid_from_necklace(forward);
  Json checks = Json::object();
  checks["positroid_matches_matchings"] = graph_positroid(g) == positroid;
  auto& p = r.payload;
  p["n"] = n;
  p["k"] = k;
  p["perm"] = perm_json(pi);
  p["length"] = len;
  p["necklace"] = necklace_json(forward);
  p["reverse_necklace"] = necklace_json(necklace_from_perm(pi, Direction::Reverse));
  p["positroid_size"] = positroid.bases.size();
  p["faces"] = emb.num_faces();
  p["reduced"] = emb.is_reduced();
  if (!emb.is_reduced()) p["reduced_witness"] = emb.reducedness().witness;
  std::vector<Subset> source, target;
  if (emb.is_reduced()) {
    checks["face_count"] = emb.num_faces() == k * (n - k) - len + 1;
    source = emb.labels(LabelMode::Source);
    target = emb.labels(LabelMode::Target);
    Json faces = Json::array();
    for (int f = 0; f < emb.num_faces(); ++f) {
      faces.push_back({{"id", emb.faces()[f].id},
                       {"source", io::subset_to_json(source[f])},
                       {"target", io::subset_to_json(target[f])}});
    }
    p["face_labels"] = faces;
  }
  if (doc.contains("expected")) {
    const Json& want = doc["expected"];
    std::vector<int> all(emb.num_faces()), internal;
    for (int f = 0; f < emb.num_faces(); ++f) {
      all[f] = f;
      if (!emb.faces()[f].boundary) internal.push_back(f);
    }
    if (want.contains("perm")) checks["expected_perm"] = want["perm"].get<std::vector<int>>() == pi.values();
    if (want.contains("faces")) checks["expected_faces"] = want["faces"].get<int>() == emb.num_faces();
    const bool labelled = emb.is_reduced();
    if (want.contains("source_labels")) {
      checks["expected_source_labels"] = labelled && sorted_sets(want["source_labels"]) == sorted_labels(source, all);
    }
    if (want.contains("target_labels")) {
      checks["expected_target_labels"] = labelled && sorted_sets(want["target_labels"]) == sorted_labels(target, all);
    }
    if (want.contains("reference_labels")) {
      checks["expected_reference_labels"] = labelled && sorted_sets(want["reference_labels"]) == sorted_labels(target, all);
    }
    if (want.contains("source_internal")) {
      checks["expected_internal_labels"] =
          labelled && sorted_sets(want["source_internal"]) == sorted_labels(source, internal);
    }
  }
  for (const auto& [name, value] : checks.items()) r.ok = r.ok && value.get<bool>();
  p["checks"] = checks;
  return r;
}

Report matchings(const std::string& path, const std::string& boundary) {
  Report r{"matchings"};
  r.inputs["graph"] = base_name(path);
  const PlabicGraph g = io::load_graph(path);
  std::optional<Subset> filter;
  if (!boundary.empty()) {
    filter = parse_subset(boundary, g.n);
    r.inputs["boundary"] = io::subset_to_json(*filter);
  }
  const auto all = enumerate_matchings(g, filter);
  Json list = Json::array();
  for (const Matching& m : all) {
    list.push_back({{"edges", matching_ids(g, m)}, {"boundary", io::subset_to_json(m.boundary)}});
  }
  r.payload["count"] = all.size();
  r.payload["matchings"] = list;
  return r;
}

Report measure_cmd(const std::string& path, const std::string& weights) {
  Report r{"measure"};
  r.inputs["graph"] = base_name(path);
  r.inputs["weights"] = weights == "unit" ? weights : base_name(weights);
  const PlabicGraph g = io::load_graph(path);
  const PlueckerVector p = measure(g, weights_arg(weights, g));
  r.payload["n"] = p.n;
  r.payload["k"] = p.k;
  r.payload["pluecker"] = io::pluecker_to_json(p);
  r.payload["matrix"] = io::matrix_to_json(matrix_from_pluecker(p));
  return r;
}

Report labels_cmd(const std::string& path, const std::string& mode) {
  Report r{"labels"};
  r.inputs["graph"] = base_name(path);
  r.inputs["mode"] = mode;
  const LabelMode lm = mode == "source" ? LabelMode::Source : LabelMode::Target;
  const Embedding emb(io::load_graph(path));
  const auto labels = emb.labels(lm);
  Json faces = Json::array();
  for (int f = 0; f < emb.num_faces(); ++f) {
    faces.push_back({{"id", emb.faces()[f].id}, {"label", io::subset_to_json(labels[f])}});
  }
  r.payload["faces"] = faces;
  return r;
}

Report twist_cmd(const std::string& path, bool left, int times) {
  Report r{"twist"};
  r.inputs["matrix"] = base_name(path);
  r.inputs["side"] = left ? "left" : "right";
  r.inputs["times"] = times;
  Matrix a = io::load_matrix(path);
  Json chain = Json::array({io::matrix_to_json(a)});
  for (int t = 0; t < times; ++t) {
    a = twist(a, left ? Side::Left : Side::Right);
    chain.push_back(io::matrix_to_json(a));
  }
  r.payload["matrix"] = io::matrix_to_json(a);
  r.payload["chain"] = chain;
  return r;
}

Report mu_cmd(const std::string& path) {
  Report r{"mu"};
  r.inputs["matrix"] = base_name(path);
  const Matrix a = io::load_matrix(path);
  const Matrix m = double_twist_mu(a);
  r.payload["matrix"] = io::matrix_to_json(m);
  r.payload["pluecker"] = io::pluecker_to_json(pluecker(m));
  return r;
}

Report verify_cmd(const std::string& path, std::uint64_t seed, int trials) {
  Report r{"verify"};
  r.inputs["graph"] = base_name(path);
  r.inputs["seed"] = seed;
  r.inputs["trials"] = trials;
  if (trials < 1) throw InputError("--trials must be positive");
  const Embedding emb(io::load_graph(path));
  const auto results = verify_diagram(emb, seed, trials);
  Json list = Json::array();
  for (const CheckResult& c : results) {
    Json item{{"check", c.check}, {"trial", c.trial}, {"pass", c.pass}};
    if (!c.pass) item["witness"] = c.witness;
    list.push_back(item);
    r.ok = r.ok && c.pass;
  }
  r.payload["checks"] = list;
  return r;
}

Report synth_cmd(const std::string& perm) {
  Report r{"synth"};
  const std::vector<int> values = parse_int_list(perm);
  r.inputs["perm"] = values;
  const AffinePerm pi(static_cast<int>(values.size()), values);
  const Synthesis s = synthesize(pi);
  const Embedding emb(s.graph);
  r.payload["n"] = pi.n();
  r.payload["k"] = pi.k();
  r.payload["length"] = length(pi);
  r.payload["faces"] = emb.num_faces();
  r.payload["reduced"] = emb.is_reduced();
  r.payload["steps"] = io::steps_to_json(s.steps);
  r.payload["graph"] = io::graph_to_json(s.graph);
  return r;
}

Report move_cmd(const std::string& path, const std::string& weights, const std::string& spec) {
  Report r{"move"};
  r.inputs["graph"] = base_name(path);
  r.inputs["weights"] = weights == "unit" ? weights : base_name(weights);
  r.inputs["spec"] = base_name(spec);
  const PlabicGraph g = io::load_graph(path);
  const EdgeWeighting z = weights_arg(weights, g);
  const auto moves = io::moves_from_json(io::load_json_file(spec));
  const MoveResult out = apply_moves(g, z, moves);
  const bool preserved = measure(out.graph, out.weights).coords == measure(g, z).coords;
  r.ok = preserved;
  r.payload["measure_preserved"] = preserved;
  if (!out.gauge_vertex.empty()) {
    r.payload["gauge_vertex"] = out.gauge_vertex;
    r.payload["gauge_factor"] = to_string(out.gauge_factor);
  }
  r.payload["graph"] = io::graph_to_json(out.graph);
  r.payload["weights"] = io::weights_to_json(out.graph, out.weights);
  return r;
}

Report laurent_cmd(const std::string& path, const std::string& subset) {
  Report r{"laurent"};
  r.inputs["graph"] = base_name(path);
  const PlabicGraph g = io::load_graph(path);
  const Subset j = parse_subset(subset, g.n);
  r.inputs["J"] = io::subset_to_json(j);
  const Embedding emb(g);
  const auto terms = twisted_pluecker_laurent(emb, incidence_data(emb, Direction::Forward), j);
  Json list = Json::array();
  for (const LaurentTerm& t : terms) {
    Json powers = Json::object();
    for (int f = 0; f < emb.num_faces(); ++f) {
      if (t.exponents[f] != 0) powers[emb.faces()[f].id] = t.exponents[f];
    }
    list.push_back({{"matching", matching_ids(g, t.matching)}, {"exponents", powers}});
  }
  r.payload["count"] = terms.size();
  r.payload["terms"] = list;
  return r;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message, const Json& extra) {
  Json e{{"status", "error"}, {"error", kind}, {"message", message}};
  for (const auto& [key, value] : extra.items()) e[key] = value;
  err << e.dump() << "\n";
}

#ifndef PTW_FIXTURE_DIR
#define PTW_FIXTURE_DIR "fixtures"
#endif

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact plabic graph, boundary measurement and twist toolkit", "ptwist"};
  app.require_subcommand(0, 1);
  std::string regen_dir;
  std::string fixture_dir = PTW_FIXTURE_DIR;
  bool timing = false;
  app.add_option("--regen-golden", regen_dir, "Rewrite the golden outputs into this directory");
  app.add_option("--fixtures", fixture_dir, "Fixture directory used by --regen-golden");
  app.add_flag("--timing", timing, "Report elapsed time on stderr");

  std::function<Report()> action;
  std::string graph, weights, matrix, boundary, mode = "source", perm, spec, subset;
  bool dot = false, left = false, right = false;
  int times = 1, trials = 5;
  std::uint64_t seed = 1;

  auto* c = app.add_subcommand("inspect", "Trip permutation, necklaces, faces and self-checks");
  c->add_option("graph", graph)->required();
  c->add_flag("--dot", dot, "Print the graph in DOT format instead");
  c->callback([&] { action = [&] { return inspect(graph, dot); }; });

  c = app.add_subcommand("matchings", "Enumerate perfect matchings");
  c->add_option("graph", graph)->required();
  c->add_option("--boundary", boundary, "Only matchings with this boundary, e.g. 1,3");
  c->callback([&] { action = [&] { return matchings(graph, boundary); }; });

  c = app.add_subcommand("measure", "Boundary measurement of a weighted graph");
  c->add_option("graph", graph)->required();
  c->add_option("weights", weights, "Weights file, or 'unit'")->required();
  c->callback([&] { action = [&] { return measure_cmd(graph, weights); }; });

  c = app.add_subcommand("labels", "Face labels");
  c->add_option("graph", graph)->required();
  c->add_option("--mode", mode)->check(CLI::IsMember({"source", "target"}));
  c->callback([&] { action = [&] { return labels_cmd(graph, mode); }; });

  c = app.add_subcommand("twist", "Left or right twist of a matrix");
  c->add_option("matrix", matrix)->required();
  auto* l = c->add_flag("--left", left);
  auto* rr = c->add_flag("--right", right);
  l->excludes(rr);
  c->add_option("--times", times)->check(CLI::NonNegativeNumber);
  c->callback([&] {
    if (!left && !right) throw CLI::ValidationError("twist", "one of --left or --right is required");
    action = [&] { return twist_cmd(matrix, left, times); };
  });

  c = app.add_subcommand("mu", "Double twist by the necklace map");
  c->add_option("matrix", matrix)->required();
  c->callback([&] { action = [&] { return mu_cmd(matrix); }; });

  c = app.add_subcommand("verify", "Check the twist and measurement diagram at random weights");
  c->add_option("graph", graph)->required();
  c->add_option("--seed", seed);
  c->add_option("--trials", trials);
  c->callback([&] { action = [&] { return verify_cmd(graph, seed, trials); }; });

  c = app.add_subcommand("synth", "Build a reduced graph from a bounded affine permutation");
  c->add_option("--perm", perm, "Values pi(1),...,pi(n)")->required();
  c->callback([&] { action = [&] { return synth_cmd(perm); }; });

  c = app.add_subcommand("move", "Apply a move script to a weighted graph");
  c->add_option("graph", graph)->required();
  c->add_option("weights", weights, "Weights file, or 'unit'")->required();
  c->add_option("--spec", spec, "JSON array of moves")->required();
  c->callback([&] { action = [&] { return move_cmd(graph, weights, spec); }; });

  c = app.add_subcommand("laurent", "Twisted Pluecker coordinate as a Laurent polynomial in face coordinates");
  c->add_option("graph", graph)->required();
  c->add_option("--J", subset, "Subset, e.g. 2,4,6,8")->required();
  c->callback([&] { action = [&] { return laurent_cmd(graph, subset); }; });

  std::vector<std::string> argv_store{"ptwist"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!regen_dir.empty()) {
      const int written = regenerate_golden(fixture_dir, regen_dir);
      out << Json{{"command", "regen-golden"}, {"written", written}}.dump(1) << "\n";
      return 0;
    }
    if (!action) {
      out << app.help();
      return 1;
    }
    const Report r = action();
    if (r.text) {
      out << *r.text;
    } else {
      Json doc{{"command", r.command}, {"inputs", r.inputs}, {"status", r.ok ? "ok" : "fail"}, {"payload", r.payload}};
      out << doc.dump(1) << "\n";
    }
    if (timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      err << Json{{"elapsed_ms", ms.count()}}.dump() << "\n";
    }
    return r.ok ? 0 : 2;
  } catch (const GraphError& e) {
    emit_error(err, "input", e.what(), Json{{"violations", e.violations()}});
    return 1;
  } catch (const InputError& e) {
    emit_error(err, "input", e.what(), Json::object());
    return 1;
  } catch (const MathError& e) {
    emit_error(err, "math", e.what(), Json{{"witness", e.witness()}});
    return 2;
  }
}

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"inspect_square4", {"inspect", "{fixtures}/square4.json"}, 0},
      {"inspect_schubert36", {"inspect", "{fixtures}/schubert36.json"}, 0},
      {"inspect_d4", {"inspect", "{fixtures}/d4.json"}, 0},
      {"inspect_nonplucker36", {"inspect", "{fixtures}/nonplucker36.json"}, 0},
      {"inspect_square4_dot", {"inspect", "{fixtures}/square4.json", "--dot"}, 0},
      {"matchings_square4_13", {"matchings", "{fixtures}/square4.json", "--boundary", "1,3"}, 0},
      {"measure_square4_unit", {"measure", "{fixtures}/square4.json", "unit"}, 0},
      {"measure_schubert36_weights", {"measure", "{fixtures}/schubert36.json", "{fixtures}/schubert36_weights.json"}, 0},
      {"labels_schubert36_target", {"labels", "{fixtures}/schubert36.json", "--mode", "target"}, 0},
      {"twist_ex35_right2", {"twist", "{fixtures}/ex35.json", "--right", "--times", "2"}, 0},
      {"twist_ex35_left", {"twist", "{fixtures}/ex35.json", "--left"}, 0},
      {"mu_ex35", {"mu", "{fixtures}/ex35.json"}, 0},
      {"verify_square4", {"verify", "{fixtures}/square4.json", "--seed", "7", "--trials", "2"}, 0},
      {"synth_schubert", {"synth", "--perm", "3,5,6,7,8,10"}, 0},
      {"synth_lollipops", {"synth", "--perm", "1,6,3,4"}, 0},
      {"move_square4_renewal", {"move", "{fixtures}/square4.json", "unit", "--spec", "{fixtures}/square4_moves.json"}, 0},
      {"laurent_d4_4568", {"laurent", "{fixtures}/d4.json", "--J", "4,5,6,8"}, 0},
      {"error_missing_file", {"inspect", "{fixtures}/no_such_graph.json"}, 1},
      {"error_bad_perm", {"synth", "--perm", "2,2,3"}, 1},
      {"error_contract_degree3", {"move", "{fixtures}/square4.json", "unit", "--spec", "{fixtures}/bad_move.json"}, 2},
  };
  return cases;
}

std::vector<std::string> expand_golden_args(const GoldenCase& c, const std::string& fixture_dir) {
  std::vector<std::string> out;
  for (std::string a : c.args) {
    const std::string key = "{fixtures}";
    if (auto p = a.find(key); p != std::string::npos) a.replace(p, key.size(), fixture_dir);
    out.push_back(a);
  }
  return out;
}

std::string golden_output(const GoldenCase& c, const std::string& fixture_dir) {
  std::ostringstream out, err;
  const int code = run(expand_golden_args(c, fixture_dir), out, err);
  return "exit: " + std::to_string(code) + "\n" + out.str();
}

int regenerate_golden(const std::string& fixture_dir, const std::string& golden_dir) {
  std::filesystem::create_directories(golden_dir);
  int written = 0;
  for (const GoldenCase& c : golden_cases()) {
    std::ofstream file(std::filesystem::path(golden_dir) / (c.name + ".txt"), std::ios::binary);
    if (!file) throw InputError("cannot write golden file for " + c.name);
    file << golden_output(c, fixture_dir);
    ++written;
  }
  return written;
}

}  // namespace ptw::cli
