#include "ptw/graph.hpp"

#include <algorithm>
#include <set>

#include "ptw/embedding.hpp"
#include "ptw/errors.hpp"

namespace ptw {

const char* color_name(Color c) { return c == Color::White ? "white" : "black"; }
Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }

int PlabicGraph::find_vertex(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  return it == vertex_lookup_.end() ? -1 : it->second;
}

int PlabicGraph::find_edge(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  return it == edge_lookup_.end() ? -1 : it->second;
}

int PlabicGraph::vertex_index(const std::string& id) const {
  int v = find_vertex(id);
  if (v < 0) throw InputError("unknown vertex '" + id + "'");
  return v;
}

int PlabicGraph::edge_index(const std::string& id) const {
  int e = find_edge(id);
  if (e < 0) throw InputError("unknown edge '" + id + "'");
  return e;
}

int PlabicGraph::leg(int i) const {
  for (int e = 0; e < num_edges(); ++e) {
    if (ends[e][0] == -i || ends[e][1] == -i) return e;
  }
  throw InputError("boundary vertex " + std::to_string(i) + " has no edge");
}

int PlabicGraph::boundary_neighbor(int i) const { return other_end(leg(i), -i); }

int PlabicGraph::other_end(int e, int node) const {
  return ends[e][0] == node ? ends[e][1] : ends[e][0];
}

std::string PlabicGraph::node_name(int node) const {
  return is_boundary(node) ? std::to_string(-node) : vertex_ids[node];
}

int PlabicGraph::k() const {
  int k = 0;
  for (int v = 0; v < num_vertices(); ++v) k += colors[v] == Color::White ? 1 : -1;
  for (int i = 1; i <= n; ++i) {
    if (colors[boundary_neighbor(i)] == Color::Black) ++k;
  }
  return k;
}

void PlabicGraph::rebuild_index() {
  vertex_lookup_.clear();
  edge_lookup_.clear();
  for (int v = 0; v < num_vertices(); ++v) vertex_lookup_[vertex_ids[v]] = v;
  for (int e = 0; e < num_edges(); ++e) edge_lookup_[edge_ids[e]] = e;
}

RawGraph PlabicGraph::to_raw() const {
  RawGraph raw;
  raw.n = n;
  for (int v = 0; v < num_vertices(); ++v) raw.internal.push_back({vertex_ids[v], colors[v]});
  for (int e = 0; e < num_edges(); ++e) {
    RawGraph::Edge edge{edge_ids[e], {}};
    for (int s = 0; s < 2; ++s) {
      int node = ends[e][s];
      if (is_boundary(node)) {
        edge.ends[s] = -node;
      } else {
        edge.ends[s] = vertex_ids[node];
      }
    }
    raw.edges.push_back(std::move(edge));
  }
  for (int v = 0; v < num_vertices(); ++v) {
    auto& list = raw.rotation[vertex_ids[v]];
    for (int e : rotation[v]) list.push_back(edge_ids[e]);
  }
  return raw;
}

namespace {

void check_structure(const PlabicGraph& g, std::vector<std::string>& bad) {
  const int V = g.num_vertices();
  const int E = g.num_edges();
  if (g.n < 1) bad.push_back("n must be at least 1");
  std::vector<int> boundary_degree(g.n + 1, 0);
  std::vector<std::multiset<int>> incident(V);
  for (int e = 0; e < E; ++e) {
    const auto [a, b] = g.ends[e];
    const std::string& id = g.edge_ids[e];
    if (a == b) {
      bad.push_back("edge '" + id + "' is a loop");
      continue;
    }
    if (g.is_boundary(a) && g.is_boundary(b)) {
      bad.push_back("edge '" + id + "' joins two boundary vertices");
      continue;
    }
    for (int node : {a, b}) {
      if (g.is_boundary(node)) {
        ++boundary_degree[-node];
      } else {
        incident[node].insert(e);
      }
    }
    if (!g.is_boundary(a) && !g.is_boundary(b) && g.colors[a] == g.colors[b]) {
      bad.push_back("non-bipartite edge '" + id + "' joins two " + color_name(g.colors[a]) +
                    " vertices");
    }
  }
  for (int i = 1; i <= g.n; ++i) {
    if (boundary_degree[i] != 1) {
      bad.push_back("boundary vertex " + std::to_string(i) + " has degree " +
                    std::to_string(boundary_degree[i]) + " (expected 1)");
    }
  }
  for (int v = 0; v < V; ++v) {
    const std::string& id = g.vertex_ids[v];
    std::multiset<int> listed(g.rotation[v].begin(), g.rotation[v].end());
    if (listed != incident[v]) {
      bad.push_back("rotation at '" + id + "' is not a cyclic order of its incident edges");
    }
    if (incident[v].empty()) {
      bad.push_back("vertex '" + id + "' is isolated");
    } else if (incident[v].size() == 1) {
      int e = *incident[v].begin();
      if (!g.is_boundary(g.other_end(e, v))) {
        bad.push_back("interior leaf '" + id + "' is not adjacent to the boundary");
      }
    }
  }
}

void check_connected(const PlabicGraph& g, std::vector<std::string>& bad) {
  const int V = g.num_vertices();
  std::vector<std::vector<int>> adj(V);
  std::vector<char> seen(V, 0);
  std::vector<int> stack;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.ends[e];
    if (!g.is_boundary(a) && !g.is_boundary(b)) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    } else {
      int v = g.is_boundary(a) ? b : a;
      if (!g.is_boundary(v) && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < V; ++v) {
    if (!seen[v]) bad.push_back("vertex '" + g.vertex_ids[v] + "' lies in a component without boundary");
  }
}

}  // namespace

PlabicGraph validate_graph(const PlabicGraph& input) {
  PlabicGraph g = input;
  g.rebuild_index();
  std::vector<std::string> bad;
  check_structure(g, bad);
  if (bad.empty()) check_connected(g, bad);
  if (!bad.empty()) throw GraphError(bad);
  Embedding planarity_check(g);
  return g;
}

PlabicGraph validate_graph(const RawGraph& raw) {
  PlabicGraph g;
  std::vector<std::string> bad;
  g.n = raw.n;
  std::set<std::string> seen;
  for (const auto& v : raw.internal) {
    if (!seen.insert(v.id).second) bad.push_back("duplicate vertex id '" + v.id + "'");
    g.vertex_ids.push_back(v.id);
    g.colors.push_back(v.color);
  }
  g.rebuild_index();
  std::set<std::string> seen_edges;
  for (const auto& e : raw.edges) {
    if (!seen_edges.insert(e.id).second) bad.push_back("duplicate edge id '" + e.id + "'");
    std::array<int, 2> ends{};
    for (int s = 0; s < 2; ++s) {
      if (std::holds_alternative<int>(e.ends[s])) {
        int i = std::get<int>(e.ends[s]);
        if (i < 1 || i > raw.n) {
          bad.push_back("edge '" + e.id + "' names boundary vertex " + std::to_string(i) +
                        " outside [1," + std::to_string(raw.n) + "]");
        }
        ends[s] = -i;
      } else {
        const auto& id = std::get<std::string>(e.ends[s]);
        int v = g.find_vertex(id);
        if (v < 0) bad.push_back("edge '" + e.id + "' names unknown vertex '" + id + "'");
        ends[s] = v;
      }
    }
    g.edge_ids.push_back(e.id);
    g.ends.push_back(ends);
  }
  g.rebuild_index();
  g.rotation.assign(g.num_vertices(), {});
  for (const auto& [vid, list] : raw.rotation) {
    int v = g.find_vertex(vid);
    if (v < 0) {
      bad.push_back("rotation given for unknown vertex '" + vid + "'");
      continue;
    }
    for (const auto& eid : list) {
      int e = g.find_edge(eid);
      if (e < 0) {
        bad.push_back("rotation at '" + vid + "' names unknown edge '" + eid + "'");
        continue;
      }
      g.rotation[v].push_back(e);
    }
  }
  if (!bad.empty()) throw GraphError(bad);
  return validate_graph(g);
}

}  // namespace ptw
