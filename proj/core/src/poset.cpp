#include "ptw/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "ptw/errors.hpp"

namespace ptw {

namespace {

// Boundary edges of f split into the half with f directly downstream and the rest.
void face_halves(const Embedding& emb, const IncidenceData& down, int face, std::vector<int>& lower,
                 std::vector<int>& upper) {
  for (int e : emb.faces()[face].edges) {
    (down.adjacent_face[e] == face ? lower : upper).push_back(e);
  }
  std::sort(lower.begin(), lower.end());
  std::sort(upper.begin(), upper.end());
}

}  // namespace

std::optional<SwivelDirection> swivel_direction(const Embedding& emb, const IncidenceData& down,
                                                const Matching& m, int face) {
  if (emb.faces()[face].boundary) return std::nullopt;
  std::vector<int> lower, upper;
  face_halves(emb, down, face, lower, upper);
  std::vector<int> in_m;
  for (int e : emb.faces()[face].edges) {
    if (std::find(m.edges.begin(), m.edges.end(), e) != m.edges.end()) in_m.push_back(e);
  }
  std::sort(in_m.begin(), in_m.end());
  if (in_m == lower) return SwivelDirection::Up;
  if (in_m == upper) return SwivelDirection::Down;
  return std::nullopt;
}

Matching swivel(const Embedding& emb, const IncidenceData& down, const Matching& m, int face,
                SwivelDirection dir) {
  auto applicable = swivel_direction(emb, down, m, face);
  if (!applicable || *applicable != dir) {
    throw MathError("swivel does not apply", "face " + emb.faces()[face].id);
  }
  std::vector<int> lower, upper;
  face_halves(emb, down, face, lower, upper);
  const auto& drop = dir == SwivelDirection::Up ? lower : upper;
  const auto& add = dir == SwivelDirection::Up ? upper : lower;
  std::vector<int> edges;
  for (int e : m.edges) {
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) edges.push_back(e);
  }
  edges.insert(edges.end(), add.begin(), add.end());
  check_matching(emb.graph(), edges);
  return make_matching(emb.graph(), edges);
}

namespace {

// The bound that dominates every other common bound, or -1.
int extreme_bound(const std::vector<std::vector<char>>& leq, int a, int b, bool lower) {
  const int N = static_cast<int>(leq.size());
  auto below = [&](int x, int y) { return lower ? leq[x][y] != 0 : leq[y][x] != 0; };
  std::vector<int> bounds;
  for (int z = 0; z < N; ++z) {
    if (below(z, a) && below(z, b)) bounds.push_back(z);
  }
  for (int m : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(), [&](int z) { return below(z, m); })) return m;
  }
  return -1;
}

}  // namespace

int MatchingPoset::meet(int a, int b) const { return extreme_bound(leq, a, b, true); }
int MatchingPoset::join(int a, int b) const { return extreme_bound(leq, a, b, false); }

bool MatchingPoset::is_lattice() const {
  const int N = static_cast<int>(nodes.size());
  for (int a = 0; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) {
      if (meet(a, b) < 0 || join(a, b) < 0) return false;
    }
  }
  return true;
}

MatchingPoset matching_poset(const Embedding& emb, const IncidenceData& down, const Subset& boundary) {
  const PlabicGraph& g = emb.graph();
  MatchingPoset p;
  p.boundary = boundary;
  p.nodes = enumerate_matchings(g, boundary);
  if (p.nodes.empty()) throw MathError("boundary is not matchable", "{" + format_subset(boundary) + "}");
  const int N = static_cast<int>(p.nodes.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < N; ++i) index[p.nodes[i].edges] = i;

  std::vector<std::vector<int>> up(N), undirected(N);
  for (int i = 0; i < N; ++i) {
    for (int f = 0; f < emb.num_faces(); ++f) {
      auto dir = swivel_direction(emb, down, p.nodes[i], f);
      if (dir != SwivelDirection::Up) continue;
      const Matching next = swivel(emb, down, p.nodes[i], f, SwivelDirection::Up);
      const int j = index.at(next.edges);
      p.covers.push_back({i, j, f});
      up[i].push_back(j);
      undirected[i].push_back(j);
      undirected[j].push_back(i);
    }
  }

  std::vector<char> seen(N, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : undirected[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  p.connected = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });

  p.leq.assign(N, std::vector<char>(N, 0));
  p.acyclic = true;
  for (int i = 0; i < N; ++i) {
    std::vector<int> stack{i};
    p.leq[i][i] = 1;
    std::vector<char> strict(N, 0);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : up[x]) {
        if (strict[y]) continue;
        strict[y] = 1;
        p.leq[i][y] = 1;
        stack.push_back(y);
      }
    }
    if (strict[i]) p.acyclic = false;
  }

  auto unique_extreme = [&](bool lowest) {
    int found = -1;
    for (int i = 0; i < N; ++i) {
      bool extreme = true;
      for (int j = 0; j < N && extreme; ++j) extreme = lowest ? p.leq[i][j] : p.leq[j][i];
      if (extreme) {
        if (found >= 0) return -1;
        found = i;
      }
    }
    return found;
  };
  if (p.acyclic) {
    p.minimum = unique_extreme(true);
    p.maximum = unique_extreme(false);
  }
  return p;
}

}  // namespace ptw
