#include "ptw/io.hpp"

#include <fstream>

#include "ptw/errors.hpp"

namespace ptw::io {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& value) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << value.dump(1) << "\n";
}

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

Color parse_color(const std::string& s) {
  if (s == "white") return Color::White;
  if (s == "black") return Color::Black;
  throw InputError("unknown color '" + s + "'");
}

}  // namespace

RawGraph raw_graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    RawGraph raw;
    raw.n = j.at("n").get<int>();
    for (const auto& v : j.at("internal")) {
      raw.internal.push_back({v.at("id").get<std::string>(), parse_color(v.at("color").get<std::string>())});
    }
    for (const auto& e : j.at("edges")) {
      RawGraph::Edge edge{e.at("id").get<std::string>(), {}};
      const auto& ends = e.at("ends");
      if (!ends.is_array() || ends.size() != 2) throw InputError("edge '" + edge.id + "' needs two ends");
      for (int s = 0; s < 2; ++s) {
        if (ends[s].is_number_integer()) {
          edge.ends[s] = ends[s].get<int>();
        } else {
          edge.ends[s] = ends[s].get<std::string>();
        }
      }
      raw.edges.push_back(std::move(edge));
    }
    for (const auto& [vid, list] : j.at("rotation").items()) {
      raw.rotation[vid] = list.get<std::vector<std::string>>();
    }
    return raw;
  });
}

PlabicGraph graph_from_json(const Json& j) { return validate_graph(raw_graph_from_json(j)); }

PlabicGraph load_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

Json graph_to_json(const PlabicGraph& g) {
  RawGraph raw = g.to_raw();
  Json j;
  j["n"] = raw.n;
  j["internal"] = Json::array();
  for (const auto& v : raw.internal) j["internal"].push_back({{"id", v.id}, {"color", color_name(v.color)}});
  j["edges"] = Json::array();
  for (const auto& e : raw.edges) {
    Json ends = Json::array();
    for (const auto& end : e.ends) {
      if (std::holds_alternative<int>(end)) {
        ends.push_back(std::get<int>(end));
      } else {
        ends.push_back(std::get<std::string>(end));
      }
    }
    j["edges"].push_back({{"id", e.id}, {"ends", ends}});
  }
  j["rotation"] = Json::object();
  for (const auto& v : raw.internal) j["rotation"][v.id] = raw.rotation[v.id];
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("rational must be a string \"p/q\" or an integer");
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const int k = j.at("k").get<int>();
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != k) throw InputError("matrix has wrong row count");
    Matrix m(k, n);
    for (int r = 0; r < k; ++r) {
      if (static_cast<int>(rows[r].size()) != n) throw InputError("matrix row has wrong length");
      for (int c = 0; c < n; ++c) m.at(r, c) = rational_from_json(rows[r][c]);
    }
    return m;
  });
}

Matrix load_matrix(const std::string& path) { return matrix_from_json(load_json_file(path)); }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return {{"k", m.rows()}, {"n", m.cols()}, {"rows", rows}};
}

PlueckerVector pluecker_from_json(const Json& j, int n, int k) {
  return guarded("Pluecker vector", [&] {
    PlueckerVector p;
    p.n = n;
    p.k = k;
    for (const auto& s : k_subsets(n, k)) p.coords[s] = 0;
    for (const auto& entry : j) {
      Subset s = subset_from_json(entry.at("I"));
      if (static_cast<int>(s.size()) != k || !is_valid_subset(s, n)) {
        throw InputError("Pluecker entry {" + format_subset(s) + "} has wrong shape");
      }
      p.coords[s] = rational_from_json(entry.at("value"));
    }
    return p;
  });
}

Json pluecker_to_json(const PlueckerVector& p) {
  Json out = Json::array();
  for (const auto& [s, v] : p.coords) out.push_back({{"I", subset_to_json(s)}, {"value", to_string(v)}});
  return out;
}

Json subset_to_json(const Subset& s) { return Json(s); }

Subset subset_from_json(const Json& j) {
  auto v = j.get<std::vector<int>>();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace ptw::io

namespace ptw::io {

EdgeWeighting weights_from_json(const Json& j, const PlabicGraph& g) {
  if (!j.is_object()) throw InputError("weights must be a JSON object keyed by edge id");
  EdgeWeighting z(g.num_edges());
  std::vector<char> seen(g.num_edges(), 0);
  for (const auto& [id, value] : j.items()) {
    const int e = g.edge_index(id);
    z[e] = rational_from_json(value);
    seen[e] = 1;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!seen[e]) throw InputError("no weight for edge '" + g.edge_ids[e] + "'");
  }
  return z;
}

EdgeWeighting load_weights(const std::string& path, const PlabicGraph& g) {
  return weights_from_json(load_json_file(path), g);
}

Json weights_to_json(const PlabicGraph& g, const EdgeWeighting& z) {
  Json out = Json::object();
  for (int e = 0; e < g.num_edges(); ++e) out[g.edge_ids[e]] = to_string(z[e]);
  return out;
}

std::vector<Move> moves_from_json(const Json& j) {
  return guarded("move script", [&] {
    if (!j.is_array()) throw InputError("move script must be a JSON array");
    std::vector<Move> out;
    for (const auto& step : j) {
      Move m;
      m.kind = parse_move_kind(step.at("kind").get<std::string>());
      const auto& site = step.at("site");
      m.site = site.is_number_integer() ? std::to_string(site.get<int>()) : site.get<std::string>();
      if (step.contains("edges")) m.edges = step.at("edges").get<std::vector<std::string>>();
      out.push_back(std::move(m));
    }
    return out;
  });
}

Json moves_to_json(const std::vector<Move>& moves) {
  Json out = Json::array();
  for (const Move& m : moves) {
    Json step{{"kind", move_kind_name(m.kind)}, {"site", m.site}};
    if (!m.edges.empty()) step["edges"] = m.edges;
    out.push_back(std::move(step));
  }
  return out;
}

std::vector<BridgeStep> steps_from_json(const Json& j) {
  return guarded("bridge script", [&] {
    if (!j.is_array()) throw InputError("bridge script must be a JSON array");
    std::vector<BridgeStep> out;
    for (const auto& step : j) {
      out.push_back({parse_step_kind(step.at("kind").get<std::string>()), step.at("position").get<int>()});
    }
    return out;
  });
}

Json steps_to_json(const std::vector<BridgeStep>& steps) {
  Json out = Json::array();
  for (const BridgeStep& s : steps) out.push_back({{"kind", step_kind_name(s.kind)}, {"position", s.position}});
  return out;
}

}  // namespace ptw::io
