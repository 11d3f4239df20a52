#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptw/embedding.hpp"
#include "ptw/incidence.hpp"
#include "ptw/matchings.hpp"
#include "ptw/matrix.hpp"
#include "ptw/random.hpp"

namespace ptw {

using EdgeWeighting = std::vector<Rational>;  // by edge index
using GaugeElement = std::vector<Rational>;   // by internal vertex index
using FaceVector = std::vector<Rational>;     // by face index

EdgeWeighting unit_weighting(const PlabicGraph& g);
EdgeWeighting random_weighting(const PlabicGraph& g, WeightRng& rng);
// Throws MathError on a zero weight or wrong size.
void check_weighting(const PlabicGraph& g, const EdgeWeighting& z);

Rational monomial(const std::vector<int>& edges, const EdgeWeighting& z);
PlueckerVector evaluate(const PartitionFunction& pf, const EdgeWeighting& z);
PlueckerVector measure(const PlabicGraph& g, const EdgeWeighting& z);

EdgeWeighting gauge_apply(const PlabicGraph& g, const EdgeWeighting& z, const GaugeElement& t);
// Multiplies every edge at internal vertex v by factor.
void gauge_at_vertex(const PlabicGraph& g, EdgeWeighting& z, int v, const Rational& factor);

// Coordinate at f is p at the face label; throws MathError naming a face
// whose coordinate vanishes.
FaceVector face_pluecker(const Embedding& emb, const PlueckerVector& p, LabelMode mode);
// Same as face_pluecker(emb, pluecker(a), mode) without computing every minor.
FaceVector face_minors(const Embedding& emb, const Matrix& a, LabelMode mode);
// Forward: 1 / z^{M->(f)}; Reverse: 1 / z^{M<-(f)}.
FaceVector monomial_map(const Embedding& emb, const EdgeWeighting& z, Direction dir);
FaceVector monomial_map(const Embedding& emb, const IncidenceData& d, const EdgeWeighting& z);

struct BoundaryPartial {
  EdgeWeighting weights;
  int gauge_vertex = 0;
  Rational gauge_factor;
};
// Inverse of monomial_map up to the gauge subgroup with product one.
BoundaryPartial boundary_partial(const Embedding& emb, const FaceVector& x, Direction dir);
BoundaryPartial boundary_partial(const Embedding& emb, const IncidenceData& d, const FaceVector& x);

struct Monodromy {
  Rational value;
  std::vector<int> edges;      // boundary edges of the face starting at e1, walk order
  std::vector<int> exponents;  // -1 for odd positions (e1, e3, ...), +1 otherwise
};
// Throws MathError for boundary faces.
Monodromy monodromy(const Embedding& emb, const IncidenceData& down, const EdgeWeighting& z, int face);

struct LaurentTerm {
  Matching matching;
  std::vector<long> exponents;  // power of the source-label coordinate per face
};
std::vector<LaurentTerm> twisted_pluecker_laurent(const Embedding& emb, const IncidenceData& down,
                                                  const Subset& j);
Rational evaluate_laurent(const std::vector<LaurentTerm>& terms, const FaceVector& x);

struct CheckResult {
  std::string check;
  int trial = 0;
  bool pass = false;
  std::string witness;
};

// Exact verification of the twist/measurement commutative diagram at seeded
// random weightings.
std::vector<CheckResult> verify_diagram(const Embedding& emb, std::uint64_t seed, int trials);

}  // namespace ptw
