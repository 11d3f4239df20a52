#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace ptw {

enum class Color { White, Black };

const char* color_name(Color c);
Color opposite(Color c);

// Unvalidated description, as read from JSON. Endpoints are vertex ids or
// boundary labels 1..n.
struct RawGraph {
  using Endpoint = std::variant<int, std::string>;
  struct Vertex {
    std::string id;
    Color color;
  };
  struct Edge {
    std::string id;
    std::array<Endpoint, 2> ends;
  };
  int n = 0;
  std::vector<Vertex> internal;
  std::vector<Edge> edges;
  std::map<std::string, std::vector<std::string>> rotation;
};

// Validated plabic graph. Node codes: internal vertex v >= 0, boundary i -> -i.
class PlabicGraph {
 public:
  int n = 0;
  std::vector<std::string> vertex_ids;
  std::vector<Color> colors;
  std::vector<std::string> edge_ids;
  std::vector<std::array<int, 2>> ends;
  std::vector<std::vector<int>> rotation;  // clockwise incident edges per vertex

  static bool is_boundary(int node) { return node < 0; }
  static int boundary_node(int i) { return -i; }

  int num_vertices() const { return static_cast<int>(vertex_ids.size()); }
  int num_edges() const { return static_cast<int>(edge_ids.size()); }
  int vertex_index(const std::string& id) const;  // throws InputError
  int edge_index(const std::string& id) const;    // throws InputError
  int find_vertex(const std::string& id) const;   // -1 if absent
  int find_edge(const std::string& id) const;     // -1 if absent
  int leg(int i) const;                           // edge at boundary i
  int boundary_neighbor(int i) const;             // internal vertex on the leg at i
  int other_end(int e, int node) const;
  bool is_leg(int e) const { return is_boundary(ends[e][0]) || is_boundary(ends[e][1]); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  std::string node_name(int node) const;
  // k = #white - #black + #(black vertices adjacent to the boundary).
  int k() const;

  RawGraph to_raw() const;
  void rebuild_index();

 private:
  std::map<std::string, int> vertex_lookup_;
  std::map<std::string, int> edge_lookup_;
};

// Resolves names and checks every structural assumption; throws GraphError
// listing all violations.
PlabicGraph validate_graph(const RawGraph& raw);
// Re-validates an already resolved graph (used after rewriting).
PlabicGraph validate_graph(const PlabicGraph& g);

}  // namespace ptw
