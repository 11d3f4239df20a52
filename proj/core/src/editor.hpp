#pragma once

#include <string>
#include <vector>

#include "ptw/graph.hpp"
#include "ptw/measurement.hpp"

namespace ptw::detail {

// Mutable working copy of a weighted graph. Deleted items are tombstoned and
// compacted by finish(), which re-validates.
class Editor {
 public:
  Editor(const PlabicGraph& g, const EdgeWeighting& z) : g_(g), z_(z) {
    dead_v_.assign(g.num_vertices(), 0);
    dead_e_.assign(g.num_edges(), 0);
  }

  PlabicGraph& graph() { return g_; }
  EdgeWeighting& weights() { return z_; }

  std::string fresh_vertex_id(const std::string& base) const;
  std::string fresh_edge_id(const std::string& base) const;
  int add_vertex(const std::string& base, Color c);
  int add_edge(const std::string& base, int a, int b, const Rational& w);
  void remove_vertex(int v) { dead_v_[v] = 1; }
  void remove_edge(int e) { dead_e_[e] = 1; }
  void set_end(int e, int old_node, int new_node);
  // Replaces one occurrence of edge e in v's rotation by a sequence of edges.
  void splice_rotation(int v, int e, const std::vector<int>& replacement);
  int position(int v, int e) const;

  // Compacts, validates and returns the result.
  std::pair<PlabicGraph, EdgeWeighting> finish();

 private:
  PlabicGraph g_;
  EdgeWeighting z_;
  std::vector<char> dead_v_;
  std::vector<char> dead_e_;
};

}  // namespace ptw::detail
