#include "ptw/matchings.hpp"

#include <algorithm>
#include <functional>

#include "ptw/errors.hpp"

namespace ptw {

void sort_by_id(const PlabicGraph& g, std::vector<int>& edges) {
  std::sort(edges.begin(), edges.end(),
            [&](int a, int b) { return g.edge_ids[a] < g.edge_ids[b]; });
}

Subset matching_boundary(const PlabicGraph& g, const std::vector<int>& edges) {
  std::vector<char> used(g.num_edges(), 0);
  for (int e : edges) used[e] = 1;
  Subset out;
  for (int i = 1; i <= g.n; ++i) {
    const int leg = g.leg(i);
    const bool white = g.colors[g.other_end(leg, -i)] == Color::White;
    if (used[leg] == white) out.push_back(i);
  }
  return out;
}

void check_matching(const PlabicGraph& g, const std::vector<int>& edges) {
  std::vector<int> cover(g.num_vertices(), 0);
  for (int e : edges) {
    for (int node : g.ends[e]) {
      if (!PlabicGraph::is_boundary(node)) ++cover[node];
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (cover[v] != 1) {
      throw MathError("not a matching", "vertex '" + g.vertex_ids[v] + "' covered " +
                                            std::to_string(cover[v]) + " times");
    }
  }
}

Matching make_matching(const PlabicGraph& g, std::vector<int> edges) {
  sort_by_id(g, edges);
  Matching m;
  m.boundary = matching_boundary(g, edges);
  m.edges = std::move(edges);
  return m;
}

std::vector<std::string> matching_ids(const PlabicGraph& g, const Matching& m) {
  std::vector<std::string> ids;
  for (int e : m.edges) ids.push_back(g.edge_ids[e]);
  return ids;
}

namespace {

// Backtracking over the vertex with the fewest remaining options.
class Enumerator {
 public:
  Enumerator(const PlabicGraph& g, const std::optional<Subset>& boundary) : g_(g) {
    const int V = g.num_vertices();
    covered_.assign(V, 0);
    allowed_.assign(g.num_edges(), 1);
    if (boundary) {
      for (int i = 1; i <= g.n; ++i) {
        const int leg = g.leg(i);
        const int v = g.other_end(leg, -i);
        const bool use = contains(*boundary, i) == (g.colors[v] == Color::White);
        if (!use) {
          allowed_[leg] = 0;
        } else if (covered_[v]) {
          feasible_ = false;
        } else {
          covered_[v] = 1;
          chosen_.push_back(leg);
          allowed_[leg] = 0;
        }
      }
    }
  }

  void run(const std::function<void(const std::vector<int>&)>& emit) {
    if (feasible_) recurse(emit);
  }

 private:
  int option_count(int v, int cap) const {
    int count = 0;
    for (int e : g_.rotation[v]) {
      if (usable(e, v) && ++count >= cap) break;
    }
    return count;
  }

  bool usable(int e, int v) const {
    if (!allowed_[e]) return false;
    const int w = g_.other_end(e, v);
    return PlabicGraph::is_boundary(w) || !covered_[w];
  }

  void recurse(const std::function<void(const std::vector<int>&)>& emit) {
    int best = -1;
    int best_count = 0;
    for (int v = 0; v < g_.num_vertices(); ++v) {
      if (covered_[v]) continue;
      int c = option_count(v, best < 0 ? 1 << 30 : best_count);
      if (best < 0 || c < best_count) {
        best = v;
        best_count = c;
        if (c == 0) return;
      }
    }
    if (best < 0) {
      emit(chosen_);
      return;
    }
    for (int e : g_.rotation[best]) {
      if (!usable(e, best)) continue;
      const int w = g_.other_end(e, best);
      covered_[best] = 1;
      if (!PlabicGraph::is_boundary(w)) covered_[w] = 1;
      chosen_.push_back(e);
      recurse(emit);
      chosen_.pop_back();
      covered_[best] = 0;
      if (!PlabicGraph::is_boundary(w)) covered_[w] = 0;
    }
  }

  const PlabicGraph& g_;
  std::vector<char> covered_;
  std::vector<char> allowed_;
  std::vector<int> chosen_;
  bool feasible_ = true;
};

}  // namespace

std::vector<Matching> enumerate_matchings(const PlabicGraph& g, const std::optional<Subset>& boundary) {
  std::vector<Matching> out;
  Enumerator(g, boundary).run([&](const std::vector<int>& edges) { out.push_back(make_matching(g, edges)); });
  std::vector<std::pair<std::vector<std::string>, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.push_back({matching_ids(g, out[i]), i});
  std::sort(keys.begin(), keys.end());
  std::vector<Matching> sorted;
  sorted.reserve(out.size());
  for (const auto& [ids, i] : keys) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::size_t count_matchings(const PlabicGraph& g, const std::optional<Subset>& boundary) {
  std::size_t count = 0;
  Enumerator(g, boundary).run([&](const std::vector<int>&) { ++count; });
  return count;
}

bool is_matchable(const PlabicGraph& g, const Subset& boundary) {
  const int V = g.num_vertices();
  std::vector<char> taken(V, 0);
  for (int i = 1; i <= g.n; ++i) {
    const int leg = g.leg(i);
    const int v = g.other_end(leg, -i);
    if (contains(boundary, i) == (g.colors[v] == Color::White)) {
      if (taken[v]) return false;
      taken[v] = 1;
    }
  }
  // Kuhn's augmenting paths from the remaining white vertices to black ones.
  std::vector<int> match_of(V, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int w) {
    for (int e : g.rotation[w]) {
      if (g.is_leg(e)) continue;
      const int b = g.other_end(e, w);
      if (taken[b] || visited[b]) continue;
      visited[b] = 1;
      if (match_of[b] < 0 || augment(match_of[b])) {
        match_of[b] = w;
        return true;
      }
    }
    return false;
  };
  int whites = 0;
  int blacks = 0;
  for (int v = 0; v < V; ++v) {
    if (taken[v]) continue;
    if (g.colors[v] == Color::White) {
      ++whites;
    } else {
      ++blacks;
    }
  }
  if (whites != blacks) return false;
  for (int v = 0; v < V; ++v) {
    if (taken[v] || g.colors[v] != Color::White) continue;
    visited.assign(V, 0);
    if (!augment(v)) return false;
  }
  return true;
}

Positroid graph_positroid(const PlabicGraph& g) {
  Positroid p;
  p.n = g.n;
  p.k = g.k();
  for (const auto& s : k_subsets(g.n, p.k)) {
    if (is_matchable(g, s)) p.bases.insert(s);
  }
  if (p.bases.empty()) throw MathError("graph admits no matching");
  return p;
}

PartitionFunction partition_function(const PlabicGraph& g) {
  PartitionFunction pf;
  pf.n = g.n;
  pf.k = g.k();
  for (auto& m : enumerate_matchings(g)) pf.terms[m.boundary].push_back(std::move(m));
  return pf;
}

}  // namespace ptw
