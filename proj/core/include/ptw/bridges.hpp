#pragma once

#include <string>
#include <vector>

#include "ptw/graph.hpp"
#include "ptw/matrix.hpp"
#include "ptw/measurement.hpp"
#include "ptw/positroid.hpp"

namespace ptw {

struct WeightedGraph {
  PlabicGraph graph;
  EdgeWeighting weights;
};

// Inserts a new boundary vertex at position i (1 <= i <= n+1) carrying a
// lollipop of the given color with leg weight t. Old labels j >= i become j+1.
// Accepts the empty graph (n = 0).
WeightedGraph add_lollipop(const PlabicGraph& g, const EdgeWeighting& z, int i, Color color,
                           const Rational& t = Rational(1));

// A left bridge joins a black vertex next to boundary i to a white vertex next
// to i+1 (cyclically); a right bridge swaps the colors. Missing endpoints are
// inserted on the legs with unit leg weight. The trip permutation becomes
// s_i o pi and its length drops by one. Throws MathError when illegal.
WeightedGraph add_bridge(const PlabicGraph& g, const EdgeWeighting& z, int i, Side side,
                         const Rational& t = Rational(1));
bool bridge_is_legal(const AffinePerm& pi, int i, Side side);

enum class StepKind { BlackLollipop, WhiteLollipop, LeftBridge, RightBridge };

const char* step_kind_name(StepKind kind);
StepKind parse_step_kind(const std::string& name);  // throws InputError

struct BridgeStep {
  StepKind kind;
  int position;
};

struct Synthesis {
  PlabicGraph graph;
  std::vector<BridgeStep> steps;  // in construction order
};

// Reduced plabic graph with trip permutation pi, built from lollipops and left
// bridges.
Synthesis synthesize(const AffinePerm& pi);
PlabicGraph build_from_steps(const std::vector<BridgeStep>& steps);

// Removes the fixed point a, relabelling the remaining positions in order.
AffinePerm delete_fixed_point(const AffinePerm& pi, int a);
// Composition s_i o pi, where s_i swaps the residues i and i+1 mod n.
std::vector<int> swap_targets(const AffinePerm& pi, int i);

}  // namespace ptw
