#pragma once

#include <json.hpp>
#include <string>

#include "ptw/bridges.hpp"
#include "ptw/graph.hpp"
#include "ptw/measurement.hpp"
#include "ptw/moves.hpp"
#include "ptw/matrix.hpp"
#include "ptw/subset.hpp"

namespace ptw::io {

using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& value);

RawGraph raw_graph_from_json(const Json& j);
PlabicGraph graph_from_json(const Json& j);
PlabicGraph load_graph(const std::string& path);
Json graph_to_json(const PlabicGraph& g);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

Matrix matrix_from_json(const Json& j);
Matrix load_matrix(const std::string& path);
Json matrix_to_json(const Matrix& m);

PlueckerVector pluecker_from_json(const Json& j, int n, int k);
Json pluecker_to_json(const PlueckerVector& p);

Json subset_to_json(const Subset& s);
Subset subset_from_json(const Json& j);

// Weights: object {edgeId: "p/q" | integer} naming every edge exactly once.
EdgeWeighting weights_from_json(const Json& j, const PlabicGraph& g);
EdgeWeighting load_weights(const std::string& path, const PlabicGraph& g);
Json weights_to_json(const PlabicGraph& g, const EdgeWeighting& z);

// Move scripts: arrays of {"kind", "site", "edges"?}.
std::vector<Move> moves_from_json(const Json& j);
Json moves_to_json(const std::vector<Move>& moves);

// Bridge scripts: arrays of {"kind", "position"}.
std::vector<BridgeStep> steps_from_json(const Json& j);
Json steps_to_json(const std::vector<BridgeStep>& steps);

}  // namespace ptw::io
