#pragma once

#include <string>
#include <vector>

#include "ptw/graph.hpp"
#include "ptw/measurement.hpp"

namespace ptw {

enum class MoveKind { Contract, Expand, BoundaryRemove, BoundaryAdd, UrbanRenewal };

const char* move_kind_name(MoveKind kind);
MoveKind parse_move_kind(const std::string& name);  // throws InputError

// site: vertex id (contract, expand, boundary-remove), boundary label
// (boundary-add) or face id (urban-renewal). edges: for expand, a cyclically
// contiguous block of the vertex's edges that moves to the new vertex.
struct Move {
  MoveKind kind = MoveKind::Contract;
  std::string site;
  std::vector<std::string> edges;
};

// The returned weights give the same point of the Grassmannian as the input.
// When the move needs a gauge transformation to achieve that, it is applied at
// gauge_vertex and reported.
struct MoveResult {
  PlabicGraph graph;
  EdgeWeighting weights;
  std::string gauge_vertex;
  Rational gauge_factor = 1;
};

// Throws InputError for an unknown site and MathError when the move does not
// apply there.
MoveResult apply_move(const PlabicGraph& g, const EdgeWeighting& z, const Move& move);
MoveResult apply_moves(const PlabicGraph& g, const EdgeWeighting& z, const std::vector<Move>& moves);

// All moves applicable to g (expansions only split off a single edge).
std::vector<Move> applicable_moves(const PlabicGraph& g);

}  // namespace ptw
