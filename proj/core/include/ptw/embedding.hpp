#pragma once

#include <string>
#include <vector>

#include "ptw/graph.hpp"
#include "ptw/positroid.hpp"
#include "ptw/subset.hpp"

namespace ptw {

struct Face {
  std::string id;
  bool boundary = false;
  std::vector<int> gaps;        // i such that the face touches the arc from i to i+1
  std::vector<int> half_edges;  // graph half-edges of the walk, in order; face on the left
  std::vector<int> edges;       // edges of the walk, in order
};

struct Strand {
  int source = 0;
  int target = 0;
  std::vector<int> path;     // graph half-edges traversed
  int start_corner = -1;     // corner cut at the source boundary vertex
  std::vector<int> corners;  // corners[t] is cut at the head of path[t]
  bool lollipop() const { return path.size() == 2 && (path[0] ^ 1) == path[1]; }
};

struct ReducedReport {
  bool reduced = true;
  std::string witness;
};

enum class LabelMode { Source, Target };

// Combinatorial map of a plabic graph together with its boundary circle.
// Half-edge 2e runs ends[0] -> ends[1] of edge e and 2e+1 the other way; the
// boundary arc from i to i+1 has forward half-edge 2E + 2(i-1) and its reverse
// at the next index. Faces lie to the left of their half-edges.
class Embedding {
 public:
  explicit Embedding(const PlabicGraph& g);

  const PlabicGraph& graph() const { return g_; }
  int num_graph_half_edges() const { return 2 * g_.num_edges(); }
  int num_half_edges() const { return static_cast<int>(tail_.size()); }
  int tail(int h) const { return tail_[h]; }
  int head(int h) const { return tail_[h ^ 1]; }
  static int twin(int h) { return h ^ 1; }
  bool is_arc(int h) const { return h >= num_graph_half_edges(); }
  int arc_forward(int i) const;  // i -> i+1
  int arc_reverse(int i) const;  // i+1 -> i
  int face_next(int h) const;

  int face_of(int h) const { return face_of_[h]; }  // -1 for the outer face
  int num_faces() const { return static_cast<int>(faces_.size()); }
  const std::vector<Face>& faces() const { return faces_; }
  int face_index(const std::string& id) const;  // throws InputError
  // The boundary face touching the arc from i to i+1.
  int boundary_face(int i) const { return face_of_[arc_reverse(i)]; }

  const std::vector<Strand>& strands() const { return strands_; }  // strands_[i-1] starts at i
  const std::vector<std::vector<int>>& closed_loops() const { return loops_; }
  AffinePerm trip_permutation() const { return trip_; }
  const ReducedReport& reducedness() const { return reduced_; }
  bool is_reduced() const { return reduced_.reduced; }
  // Strand (0-based) and index of the passage through half-edge h.
  std::pair<int, int> passage(int h) const { return passage_[h]; }

  // Region graph: inner faces, internal vertices and boundary vertices, joined
  // through the corners of the non-outer faces. A corner is named by the
  // half-edge entering its vertex.
  int face_node(int f) const { return f; }
  int vertex_node(int node) const;
  int num_region_nodes() const { return num_faces() + g_.num_vertices() + g_.n; }
  // Nodes reachable from seed without crossing a blocked corner.
  std::vector<char> flood(int seed, const std::vector<char>& blocked) const;

  // left_of()[s][f]: face f lies on the left of strand s.
  const std::vector<std::vector<char>>& left_of() const { return left_; }
  // Throws MathError for non-reduced graphs.
  std::vector<Subset> labels(LabelMode mode) const;

 private:
  void build_rotation();
  void trace_faces();
  void trace_strands();
  void check_reduced();
  void compute_left();
  int strand_next(int h) const;
  int out_at(int node, int pos) const;

  PlabicGraph g_;
  std::vector<int> tail_;
  std::vector<std::vector<int>> rot_out_;  // per node index: outgoing half-edges clockwise
  std::vector<int> pos_;                   // position of h in rot_out_ of its tail
  std::vector<int> face_of_;
  std::vector<Face> faces_;
  std::vector<Strand> strands_;
  std::vector<std::vector<int>> loops_;
  std::vector<std::pair<int, int>> passage_;
  AffinePerm trip_;
  ReducedReport reduced_;
  std::vector<std::vector<std::pair<int, int>>> region_adj_;  // (corner, neighbour)
  std::vector<std::vector<char>> left_;
};

}  // namespace ptw
