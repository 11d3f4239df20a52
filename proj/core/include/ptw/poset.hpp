#pragma once

#include <vector>

#include "ptw/embedding.hpp"
#include "ptw/incidence.hpp"
#include "ptw/matchings.hpp"

namespace ptw {

enum class SwivelDirection { Up, Down };

// Whether M meets the boundary of internal face f in exactly one alternating
// half; returns which way the swivel goes, or nothing.
std::optional<SwivelDirection> swivel_direction(const Embedding& emb, const IncidenceData& down,
                                                const Matching& m, int face);
// Throws MathError when the swivel does not apply.
Matching swivel(const Embedding& emb, const IncidenceData& down, const Matching& m, int face,
                SwivelDirection dir);

struct Cover {
  int lower = 0;
  int upper = 0;
  int face = 0;
};

struct MatchingPoset {
  Subset boundary;
  std::vector<Matching> nodes;
  std::vector<Cover> covers;
  std::vector<std::vector<char>> leq;  // reflexive-transitive closure of covers
  bool connected = false;
  bool acyclic = false;
  int minimum = -1;  // -1 unless unique
  int maximum = -1;

  // -1 when no unique meet/join exists.
  int meet(int a, int b) const;
  int join(int a, int b) const;
  bool is_lattice() const;
};

// Throws MathError when the boundary is not matchable.
MatchingPoset matching_poset(const Embedding& emb, const IncidenceData& down, const Subset& boundary);

}  // namespace ptw
