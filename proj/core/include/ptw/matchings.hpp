#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ptw/graph.hpp"
#include "ptw/positroid.hpp"
#include "ptw/subset.hpp"

namespace ptw {

struct Matching {
  std::vector<int> edges;  // edge indices, ordered by edge id
  Subset boundary;

  bool operator==(const Matching& other) const { return edges == other.edges; }
};

// Orders edge indices by their ids (the serialization order).
void sort_by_id(const PlabicGraph& g, std::vector<int>& edges);
Matching make_matching(const PlabicGraph& g, std::vector<int> edges);
// Throws MathError if edges do not cover every internal vertex exactly once.
void check_matching(const PlabicGraph& g, const std::vector<int>& edges);
Subset matching_boundary(const PlabicGraph& g, const std::vector<int>& edges);
std::vector<std::string> matching_ids(const PlabicGraph& g, const Matching& m);

// All matchings (or those with the given boundary), ordered lexicographically
// by their sorted edge-id lists.
std::vector<Matching> enumerate_matchings(const PlabicGraph& g,
                                          const std::optional<Subset>& boundary = std::nullopt);
std::size_t count_matchings(const PlabicGraph& g, const std::optional<Subset>& boundary = std::nullopt);
// Whether some matching has the given boundary (augmenting paths, no enumeration).
bool is_matchable(const PlabicGraph& g, const Subset& boundary);
// Throws MathError when no matching exists.
Positroid graph_positroid(const PlabicGraph& g);

// Matchings grouped by boundary: the exact monomial form of the measurement.
struct PartitionFunction {
  int n = 0;
  int k = 0;
  std::map<Subset, std::vector<Matching>> terms;
};
PartitionFunction partition_function(const PlabicGraph& g);

}  // namespace ptw
