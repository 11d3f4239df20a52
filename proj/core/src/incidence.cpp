#include "ptw/incidence.hpp"

#include "ptw/errors.hpp"

namespace ptw {

int directly_adjacent_face(const Embedding& emb, int e, Direction dir) {
  const PlabicGraph& g = emb.graph();
  const bool forward = dir == Direction::Forward;
  if (g.is_leg(e)) {
    const int internal_side = PlabicGraph::is_boundary(g.ends[e][0]) ? 1 : 0;
    const int inward = internal_side == 1 ? 2 * e : 2 * e + 1;  // boundary -> vertex
    const bool white = g.colors[g.ends[e][internal_side]] == Color::White;
    const int h = (white == forward) ? inward : Embedding::twin(inward);
    return emb.face_of(h);
  }
  const int black_to_white = g.colors[g.ends[e][0]] == Color::Black ? 2 * e : 2 * e + 1;
  return emb.face_of(forward ? black_to_white : Embedding::twin(black_to_white));
}

IncidenceData incidence_data(const Embedding& emb, Direction dir) {
  if (!emb.is_reduced()) throw MathError("incidence data needs a reduced graph", emb.reducedness().witness);
  const PlabicGraph& g = emb.graph();
  IncidenceData d;
  d.direction = dir;
  d.F = emb.num_faces();
  d.V = g.num_vertices();
  d.E = g.num_edges();
  d.U_EF.assign(d.E, std::vector<char>(d.F, 0));
  d.U_EV.assign(d.E, std::vector<char>(d.V, 0));
  d.dFE.assign(d.F, std::vector<char>(d.E, 0));
  d.dVE.assign(d.V, std::vector<char>(d.E, 0));
  d.B.assign(d.F, 0);
  d.adjacent_face.assign(d.E, -1);

  const auto& strands = emb.strands();
  std::vector<char> blocked(emb.num_half_edges(), 0);
  for (int e = 0; e < d.E; ++e) {
    const int face = directly_adjacent_face(emb, e, dir);
    d.adjacent_face[e] = face;
    ++d.B[face];
    std::vector<int> cut;
    for (int h : {2 * e, 2 * e + 1}) {
      const auto [s, t] = emb.passage(h);
      const Strand& strand = strands[s];
      if (dir == Direction::Forward) {
        cut.insert(cut.end(), strand.corners.begin() + t, strand.corners.end());
      } else {
        cut.push_back(strand.start_corner);
        cut.insert(cut.end(), strand.corners.begin(), strand.corners.begin() + t);
      }
    }
    for (int c : cut) blocked[c] = 1;
    const auto reached = emb.flood(emb.face_node(face), blocked);
    for (int c : cut) blocked[c] = 0;
    for (int f = 0; f < d.F; ++f) d.U_EF[e][f] = reached[emb.face_node(f)];
    for (int v = 0; v < d.V; ++v) d.U_EV[e][v] = reached[emb.vertex_node(v)];

    if (g.is_leg(e)) {
      d.dFE[face][e] = 1;
    } else {
      d.dFE[emb.face_of(2 * e)][e] = 1;
      d.dFE[emb.face_of(2 * e + 1)][e] = 1;
    }
    for (int node : g.ends[e]) {
      if (!PlabicGraph::is_boundary(node)) d.dVE[node][e] = 1;
    }
  }
  return d;
}

IntMatrix block_left(const IncidenceData& d) {
  IntMatrix m(d.F + d.V, std::vector<long>(1 + d.E, 0));
  for (int f = 0; f < d.F; ++f) {
    m[f][0] = 1 - d.B[f];
    for (int e = 0; e < d.E; ++e) m[f][1 + e] = -d.dFE[f][e];
  }
  for (int v = 0; v < d.V; ++v) {
    m[d.F + v][0] = 1;
    for (int e = 0; e < d.E; ++e) m[d.F + v][1 + e] = d.dVE[v][e];
  }
  return m;
}

IntMatrix block_right(const IncidenceData& d) {
  IntMatrix m(1 + d.E, std::vector<long>(d.F + d.V, 0));
  for (int c = 0; c < d.F + d.V; ++c) m[0][c] = 1;
  for (int e = 0; e < d.E; ++e) {
    for (int f = 0; f < d.F; ++f) m[1 + e][f] = -d.U_EF[e][f];
    for (int v = 0; v < d.V; ++v) m[1 + e][d.F + v] = -d.U_EV[e][v];
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b.front().size() : 0;
  IntMatrix out(rows, std::vector<long>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != inner) throw InputError("integer matrix dimension mismatch");
    for (std::size_t m = 0; m < inner; ++m) {
      if (!a[r][m]) continue;
      for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][m] * b[m][c];
    }
  }
  return out;
}

bool is_identity(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != m.size()) return false;
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (m[r][c] != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

Matching extremal_matching(const Embedding& emb, const IncidenceData& d, int face) {
  std::vector<int> edges;
  for (int e = 0; e < d.E; ++e) {
    if (d.U_EF[e][face]) edges.push_back(e);
  }
  check_matching(emb.graph(), edges);
  return make_matching(emb.graph(), edges);
}

Matching extremal_matching(const Embedding& emb, int face, Direction dir) {
  return extremal_matching(emb, incidence_data(emb, dir), face);
}

std::vector<long> face_exponents(const IncidenceData& d, const Matching& m) {
  std::vector<long> out(d.F);
  for (int f = 0; f < d.F; ++f) {
    long count = 0;
    for (int e : m.edges) count += d.dFE[f][e];
    out[f] = count - (d.B[f] - 1);
  }
  return out;
}

}  // namespace ptw
