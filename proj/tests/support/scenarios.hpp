#pragma once

// Worked examples shared by the unit tests and the acceptance binary.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ptw/embedding.hpp"
#include "ptw/errors.hpp"
#include "ptw/matrix.hpp"
#include "ptw/measurement.hpp"
#include "ptw/subset.hpp"

namespace scenarios {

using ptw::Rational;

// Gauge every internal vertex so that the edges outside `keep` have weight 1,
// walking inward from the boundary legs. The free edges must form a forest in
// which each tree contains exactly one leg.
inline ptw::EdgeWeighting normalize_from_legs(const ptw::PlabicGraph& g, ptw::EdgeWeighting z,
                                              const std::set<std::string>& keep) {
  std::vector<char> done(g.num_vertices(), 0);
  auto known = [&](int node) { return ptw::PlabicGraph::is_boundary(node) || done[node]; };
  bool progress = true;
  while (progress) {
    progress = false;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (keep.count(g.edge_ids[e])) continue;
      const int u = g.ends[e][0];
      const int w = g.ends[e][1];
      if (known(u) == known(w)) continue;
      const int v = known(u) ? w : u;
      ptw::gauge_at_vertex(g, z, v, 1 / z[e]);
      done[v] = 1;
      progress = true;
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!done[v]) throw ptw::MathError("vertex not reached from a leg", g.vertex_ids[v]);
  }
  return z;
}

inline Rational weight_of(const ptw::PlabicGraph& g, const ptw::EdgeWeighting& z, const std::string& id) {
  return z[g.edge_index(id)];
}

// Upper unitriangular with t in entry (i, i+1), 1-based.
inline ptw::Matrix elementary(int size, int i, const Rational& t) {
  ptw::Matrix m = ptw::Matrix::identity(size);
  m.at(i - 1, i) = t;
  return m;
}

inline ptw::Matrix diagonal(const std::vector<Rational>& d) {
  ptw::Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

struct Chamber {
  Rational t1, t2, t3;
  std::vector<Rational> diag;
  ptw::EdgeWeighting weights;  // gauge-normalized
  bool measure_matches = false;
};

// Upper triangular entries (a, b, c, d, e, f) of the 3x3 block, placed next to
// the signed antidiagonal block.
inline ptw::Matrix chamber_matrix(const std::vector<Rational>& p) {
  return ptw::Matrix::from_rows({{p[0], p[1], p[2], 0, 0, 1}, {0, p[3], p[4], 0, -1, 0}, {0, 0, p[5], 1, 0, 0}});
}

inline Chamber chamber_inverse(const ptw::Embedding& emb, const ptw::Matrix& m) {
  const ptw::PlabicGraph& g = emb.graph();
  const ptw::FaceVector x = ptw::face_minors(emb, ptw::twist(m, ptw::Side::Right), ptw::LabelMode::Source);
  const auto raw = ptw::boundary_partial(emb, x, ptw::Direction::Forward);
  Chamber out;
  out.weights = normalize_from_legs(g, raw.weights, {"i1", "h2", "e3", "bf", "gi", "dh"});
  out.t1 = weight_of(g, out.weights, "bf");
  out.t2 = weight_of(g, out.weights, "gi");
  out.t3 = weight_of(g, out.weights, "dh");
  out.diag = {weight_of(g, out.weights, "i1"), weight_of(g, out.weights, "h2"), weight_of(g, out.weights, "e3")};
  out.measure_matches = ptw::measure(g, out.weights) == ptw::pluecker(m);
  return out;
}

inline ptw::Matrix chamber_product(const Chamber& c) {
  return elementary(3, 2, c.t1) * elementary(3, 1, c.t2) * elementary(3, 2, c.t3) * diagonal(c.diag);
}

inline ptw::Matrix left_block(const ptw::Matrix& m) {
  ptw::Matrix out(m.rows(), m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.rows(); ++c) out.at(r, c) = m.at(r, c);
  }
  return out;
}

// Source label -> letters of the extremal matching whose reciprocal is the
// twisted minor, on the Schubert divisor example with edge ids a..u. The 456
// entry has o, not p: with p the product would cover vertex e twice.
inline const std::map<ptw::Subset, std::string>& running_example_table() {
  static const std::map<ptw::Subset, std::string> table{
      {{1, 5, 6}, "bfhjorsu"}, {{1, 2, 6}, "bgiknrsu"}, {{2, 3, 6}, "aegipnru"},
      {{2, 3, 4}, "aceilpnt"}, {{3, 4, 5}, "acdfmopt"}, {{4, 5, 6}, "bcfjmoqu"},
      {{1, 3, 6}, "adgknrsu"}, {{3, 5, 6}, "adfhporu"}, {{2, 3, 5}, "aehilpot"},
  };
  return table;
}

inline Rational letter_product(const ptw::PlabicGraph& g, const ptw::EdgeWeighting& z, const std::string& letters) {
  Rational p = 1;
  for (char c : letters) p *= weight_of(g, z, std::string(1, c));
  return p;
}

// Source-label values at the central face and at the four faces around it.
struct OrbitRow {
  Rational center;
  std::vector<Rational> ring;
};

inline std::vector<OrbitRow> d4_orbit(const ptw::Embedding& emb, int rows) {
  const auto labels = emb.labels(ptw::LabelMode::Source);
  auto face_with = [&](const ptw::Subset& s) {
    for (int f = 0; f < emb.num_faces(); ++f) {
      if (labels[f] == s) return f;
    }
    throw ptw::MathError("no face with label", ptw::format_subset(s));
  };
  const int center = face_with({2, 4, 6, 8});
  std::vector<int> ring;
  for (const ptw::Subset& s : std::vector<ptw::Subset>{{4, 5, 6, 8}, {2, 6, 7, 8}, {1, 2, 4, 8}, {2, 3, 4, 6}}) {
    ring.push_back(face_with(s));
  }
  const ptw::PlabicGraph& g = emb.graph();
  // The point whose source coordinates are all one; the all-ones weighting
  // measures to its left twist.
  ptw::Matrix x = ptw::twist(ptw::matrix_from_pluecker(ptw::measure(g, ptw::unit_weighting(g))), ptw::Side::Right);
  std::vector<OrbitRow> out;
  for (int i = 0; i < rows; ++i) {
    const ptw::FaceVector v = ptw::face_minors(emb, x, ptw::LabelMode::Source);
    OrbitRow row{v[center], {}};
    for (int f : ring) row.ring.push_back(v[f]);
    out.push_back(row);
    x = ptw::twist(x, ptw::Side::Left);
  }
  return out;
}

}  // namespace scenarios
