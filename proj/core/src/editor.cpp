#include "editor.hpp"

#include <algorithm>

#include "ptw/errors.hpp"

namespace ptw::detail {

std::string Editor::fresh_vertex_id(const std::string& base) const {
  auto taken = [&](const std::string& id) {
    return std::find(g_.vertex_ids.begin(), g_.vertex_ids.end(), id) != g_.vertex_ids.end();
  };
  if (!taken(base)) return base;
  for (int j = 1;; ++j) {
    std::string id = base + "_" + std::to_string(j);
    if (!taken(id)) return id;
  }
}

std::string Editor::fresh_edge_id(const std::string& base) const {
  auto taken = [&](const std::string& id) {
    return std::find(g_.edge_ids.begin(), g_.edge_ids.end(), id) != g_.edge_ids.end();
  };
  if (!taken(base)) return base;
  for (int j = 1;; ++j) {
    std::string id = base + "_" + std::to_string(j);
    if (!taken(id)) return id;
  }
}

int Editor::add_vertex(const std::string& base, Color c) {
  g_.vertex_ids.push_back(fresh_vertex_id(base));
  g_.colors.push_back(c);
  g_.rotation.emplace_back();
  dead_v_.push_back(0);
  return g_.num_vertices() - 1;
}

int Editor::add_edge(const std::string& base, int a, int b, const Rational& w) {
  g_.edge_ids.push_back(fresh_edge_id(base));
  g_.ends.push_back({a, b});
  z_.push_back(w);
  dead_e_.push_back(0);
  return g_.num_edges() - 1;
}

void Editor::set_end(int e, int old_node, int new_node) {
  for (int& node : g_.ends[e]) {
    if (node == old_node) {
      node = new_node;
      return;
    }
  }
  throw MathError("edge does not touch the expected vertex", g_.edge_ids[e]);
}

int Editor::position(int v, int e) const {
  const auto& rot = g_.rotation[v];
  auto it = std::find(rot.begin(), rot.end(), e);
  if (it == rot.end()) throw MathError("edge missing from rotation", g_.edge_ids[e]);
  return static_cast<int>(it - rot.begin());
}

void Editor::splice_rotation(int v, int e, const std::vector<int>& replacement) {
  auto& rot = g_.rotation[v];
  const int p = position(v, e);
  rot.erase(rot.begin() + p);
  rot.insert(rot.begin() + p, replacement.begin(), replacement.end());
}

std::pair<PlabicGraph, EdgeWeighting> Editor::finish() {
  std::vector<int> vmap(g_.num_vertices(), -1), emap(g_.num_edges(), -1);
  PlabicGraph out;
  out.n = g_.n;
  for (int v = 0; v < g_.num_vertices(); ++v) {
    if (dead_v_[v]) continue;
    vmap[v] = out.num_vertices();
    out.vertex_ids.push_back(g_.vertex_ids[v]);
    out.colors.push_back(g_.colors[v]);
  }
  EdgeWeighting z;
  for (int e = 0; e < g_.num_edges(); ++e) {
    if (dead_e_[e]) continue;
    emap[e] = out.num_edges();
    out.edge_ids.push_back(g_.edge_ids[e]);
    std::array<int, 2> ends = g_.ends[e];
    for (int& node : ends) {
      if (!PlabicGraph::is_boundary(node)) node = vmap[node];
    }
    out.ends.push_back(ends);
    z.push_back(z_[e]);
  }
  for (int v = 0; v < g_.num_vertices(); ++v) {
    if (dead_v_[v]) continue;
    std::vector<int> rot;
    for (int e : g_.rotation[v]) rot.push_back(emap[e]);
    out.rotation.push_back(std::move(rot));
  }
  return {validate_graph(out), std::move(z)};
}

}  // namespace ptw::detail
