#pragma once

#include <vector>

#include "ptw/embedding.hpp"
#include "ptw/matchings.hpp"

namespace ptw {

using IntMatrix = std::vector<std::vector<long>>;

// Wedge and incidence data. Forward uses downstream wedges, Reverse the
// upstream analogues.
struct IncidenceData {
  Direction direction = Direction::Forward;
  int F = 0;
  int V = 0;
  int E = 0;
  std::vector<std::vector<char>> U_EF;  // [e][f]
  std::vector<std::vector<char>> U_EV;  // [e][v]
  std::vector<std::vector<char>> dFE;   // [f][e]
  std::vector<std::vector<char>> dVE;   // [v][e]
  std::vector<int> B;                   // per face
  std::vector<int> adjacent_face;       // directly downstream (or upstream) face of e
};

// Face directly downstream (Forward) or upstream (Reverse) of edge e.
int directly_adjacent_face(const Embedding& emb, int e, Direction dir);
// Requires a reduced graph.
IncidenceData incidence_data(const Embedding& emb, Direction dir = Direction::Forward);

// The two block matrices whose products should be identities.
IntMatrix block_left(const IncidenceData& d);
IntMatrix block_right(const IncidenceData& d);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
bool is_identity(const IntMatrix& m);

// M->(f) for Forward, M<-(f) for Reverse.
Matching extremal_matching(const Embedding& emb, const IncidenceData& d, int face);
Matching extremal_matching(const Embedding& emb, int face, Direction dir);

// #{e in M : d_fe = 1} - (B_f - 1) per face.
std::vector<long> face_exponents(const IncidenceData& d, const Matching& m);

}  // namespace ptw
