#include "ptw/embedding.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "ptw/errors.hpp"

namespace ptw {

Embedding::Embedding(const PlabicGraph& g) : g_(g) {
  build_rotation();
  trace_faces();
  trace_strands();
  check_reduced();
  compute_left();
}

int Embedding::arc_forward(int i) const { return num_graph_half_edges() + 2 * (mod1(i, g_.n) - 1); }
int Embedding::arc_reverse(int i) const { return arc_forward(i) + 1; }

int Embedding::vertex_node(int node) const {
  return num_faces() + (PlabicGraph::is_boundary(node) ? g_.num_vertices() - node - 1 : node);
}

namespace {

int node_slot(const PlabicGraph& g, int node) {
  return PlabicGraph::is_boundary(node) ? g.num_vertices() - node - 1 : node;
}

}  // namespace

int Embedding::out_at(int node, int pos) const {
  const auto& rot = rot_out_[node_slot(g_, node)];
  const int d = static_cast<int>(rot.size());
  return rot[((pos % d) + d) % d];
}

void Embedding::build_rotation() {
  const int E = g_.num_edges();
  const int n = g_.n;
  tail_.assign(2 * E + 2 * n, 0);
  for (int e = 0; e < E; ++e) {
    tail_[2 * e] = g_.ends[e][0];
    tail_[2 * e + 1] = g_.ends[e][1];
  }
  for (int i = 1; i <= n; ++i) {
    tail_[arc_forward(i)] = -i;
    tail_[arc_reverse(i)] = -mod1(i + 1, n);
  }
  rot_out_.assign(g_.num_vertices() + n, {});
  for (int v = 0; v < g_.num_vertices(); ++v) {
    for (int e : g_.rotation[v]) rot_out_[v].push_back(g_.ends[e][0] == v ? 2 * e : 2 * e + 1);
  }
  for (int i = 1; i <= n; ++i) {
    const int leg = g_.leg(i);
    const int leg_out = g_.ends[leg][0] == -i ? 2 * leg : 2 * leg + 1;
    rot_out_[node_slot(g_, -i)] = {arc_forward(i), leg_out, arc_reverse(i - 1)};
  }
  pos_.assign(tail_.size(), -1);
  for (const auto& rot : rot_out_) {
    for (int p = 0; p < static_cast<int>(rot.size()); ++p) pos_[rot[p]] = p;
  }
}

int Embedding::face_next(int h) const { return out_at(head(h), pos_[twin(h)] + 1); }

void Embedding::trace_faces() {
  const int H = num_half_edges();
  const int n = g_.n;
  std::vector<int> orbit_of(H, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < H; ++start) {
    if (orbit_of[start] >= 0) continue;
    std::vector<int> walk;
    int h = start;
    do {
      orbit_of[h] = static_cast<int>(orbits.size());
      walk.push_back(h);
      h = face_next(h);
    } while (h != start && static_cast<int>(walk.size()) <= H);
    orbits.push_back(std::move(walk));
  }
  std::vector<std::string> bad;
  const int outer = orbit_of[arc_forward(1)];
  std::vector<int> expected_outer;
  for (int i = 1; i <= n; ++i) expected_outer.push_back(arc_forward(i));
  std::vector<int> outer_walk = orbits[outer];
  std::sort(outer_walk.begin(), outer_walk.end());
  if (outer_walk != expected_outer) {
    bad.push_back("rotation system does not bound the disc by the boundary cycle");
  }
  const int inner_expected = g_.num_edges() - g_.num_vertices() + 1;
  if (static_cast<int>(orbits.size()) - 1 != inner_expected) {
    bad.push_back("rotation system is not planar (Euler count " +
                  std::to_string(orbits.size() - 1) + " faces, expected " +
                  std::to_string(inner_expected) + ")");
  }
  if (!bad.empty()) throw GraphError(bad);

  struct Pending {
    bool boundary;
    int key;
    int orbit;
  };
  std::vector<Pending> order;
  for (int o = 0; o < static_cast<int>(orbits.size()); ++o) {
    if (o == outer) continue;
    int min_gap = 0;
    for (int i = n; i >= 1; --i) {
      if (orbit_of[arc_reverse(i)] == o) min_gap = i;
    }
    int min_half = *std::min_element(orbits[o].begin(), orbits[o].end());
    order.push_back({min_gap > 0, min_gap > 0 ? min_gap : min_half, o});
  }
  std::sort(order.begin(), order.end(), [](const Pending& x, const Pending& y) {
    if (x.boundary != y.boundary) return x.boundary;
    return x.key < y.key;
  });
  face_of_.assign(H, -1);
  int internal_count = 0;
  for (const auto& p : order) {
    Face f;
    f.boundary = p.boundary;
    f.id = p.boundary ? "B" + std::to_string(p.key) : "F" + std::to_string(++internal_count);
    for (int i = 1; i <= n; ++i) {
      if (orbit_of[arc_reverse(i)] == p.orbit) f.gaps.push_back(i);
    }
    const auto& walk = orbits[p.orbit];
    int first = 0;
    for (int j = 0; j < static_cast<int>(walk.size()); ++j) {
      if (!is_arc(walk[j]) && (is_arc(walk[first]) || walk[j] < walk[first])) first = j;
    }
    for (std::size_t j = 0; j < walk.size(); ++j) {
      int h = walk[(first + j) % walk.size()];
      if (is_arc(h)) continue;
      f.half_edges.push_back(h);
      f.edges.push_back(h / 2);
    }
    const int index = static_cast<int>(faces_.size());
    for (int h : walk) face_of_[h] = index;
    faces_.push_back(std::move(f));
  }
}

int Embedding::face_index(const std::string& id) const {
  for (int f = 0; f < num_faces(); ++f) {
    if (faces_[f].id == id) return f;
  }
  throw InputError("unknown face '" + id + "'");
}

int Embedding::strand_next(int h) const {
  const int w = head(h);
  const int p = pos_[twin(h)];
  return g_.colors[w] == Color::White ? out_at(w, p + 1) : out_at(w, p - 1);
}

void Embedding::trace_strands() {
  const int n = g_.n;
  passage_.assign(num_half_edges(), {-1, -1});
  std::vector<int> values(n);
  for (int i = 1; i <= n; ++i) {
    Strand s;
    s.source = i;
    int h = out_at(-i, 1);
    const int first = head(h);
    s.start_corner = g_.colors[first] == Color::White ? twin(h) : arc_reverse(i);
    while (true) {
      passage_[h] = {i - 1, static_cast<int>(s.path.size())};
      s.path.push_back(h);
      const int w = head(h);
      if (PlabicGraph::is_boundary(w)) {
        const int j = -w;
        s.target = j;
        s.corners.push_back(g_.colors[tail(h)] == Color::White ? arc_reverse(j) : h);
        break;
      }
      const int next = strand_next(h);
      s.corners.push_back(g_.colors[w] == Color::White ? h : twin(next));
      h = next;
    }
    const int j = s.target;
    if (j > i) {
      values[i - 1] = j;
    } else if (j < i) {
      values[i - 1] = j + n;
    } else {
      values[i - 1] = g_.colors[first] == Color::Black ? i : i + n;
    }
    strands_.push_back(std::move(s));
  }
  trip_ = AffinePerm(n, values);

  for (int h = 0; h < num_graph_half_edges(); ++h) {
    if (passage_[h].first >= 0) continue;
    std::vector<int> loop;
    int cur = h;
    do {
      passage_[cur] = {-2 - static_cast<int>(loops_.size()), static_cast<int>(loop.size())};
      loop.push_back(cur);
      cur = strand_next(cur);
    } while (cur != h);
    loops_.push_back(std::move(loop));
  }
}

void Embedding::check_reduced() {
  if (!loops_.empty()) {
    reduced_ = {false, "closed strand through edge '" + g_.edge_ids[loops_.front().front() / 2] + "'"};
    return;
  }
  for (const auto& s : strands_) {
    if (s.lollipop()) continue;
    std::vector<int> seen;
    for (int h : s.path) seen.push_back(h / 2);
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end()) {
      reduced_ = {false, "strand from " + std::to_string(s.source) + " crosses edge '" +
                             g_.edge_ids[*dup] + "' twice"};
      return;
    }
  }
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> shared;
  for (int e = 0; e < g_.num_edges(); ++e) {
    auto [s1, t1] = passage_[2 * e];
    auto [s2, t2] = passage_[2 * e + 1];
    if (s1 == s2) continue;
    if (s1 > s2) {
      std::swap(s1, s2);
      std::swap(t1, t2);
    }
    shared[{s1, s2}].push_back({t1, t2});
  }
  for (auto& [pair, positions] : shared) {
    std::sort(positions.begin(), positions.end());
    for (std::size_t j = 1; j < positions.size(); ++j) {
      if (positions[j].second >= positions[j - 1].second) {
        const auto& a = strands_[pair.first];
        reduced_ = {false, "strands from " + std::to_string(pair.first + 1) + " and " +
                               std::to_string(pair.second + 1) + " cross edges '" +
                               g_.edge_ids[a.path[positions[j - 1].first] / 2] + "' and '" +
                               g_.edge_ids[a.path[positions[j].first] / 2] +
                               "' in the same order"};
        return;
      }
    }
  }
}

std::vector<char> Embedding::flood(int seed, const std::vector<char>& blocked) const {
  std::vector<char> reached(num_region_nodes(), 0);
  std::deque<int> queue{seed};
  reached[seed] = 1;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    for (auto [corner, next] : region_adj_[node]) {
      if (blocked[corner] || reached[next]) continue;
      reached[next] = 1;
      queue.push_back(next);
    }
  }
  return reached;
}

void Embedding::compute_left() {
  region_adj_.assign(num_region_nodes(), {});
  for (int c = 0; c < num_half_edges(); ++c) {
    if (face_of_[c] < 0) continue;
    const int a = face_node(face_of_[c]);
    const int b = vertex_node(head(c));
    region_adj_[a].push_back({c, b});
    region_adj_[b].push_back({c, a});
  }
  left_.clear();
  std::vector<char> blocked(num_half_edges(), 0);
  for (const auto& s : strands_) {
    blocked[s.start_corner] = 1;
    for (int c : s.corners) blocked[c] = 1;
    const int h0 = s.path.front();
    const int v = head(h0);
    const int seed = g_.colors[v] == Color::White ? face_node(face_of_[h0]) : vertex_node(v);
    auto reached = flood(seed, blocked);
    left_.emplace_back(reached.begin(), reached.begin() + num_faces());
    blocked[s.start_corner] = 0;
    for (int c : s.corners) blocked[c] = 0;
  }
}

std::vector<Subset> Embedding::labels(LabelMode mode) const {
  if (!is_reduced()) throw MathError("face labels need a reduced graph", reduced_.witness);
  std::vector<Subset> out(num_faces());
  for (std::size_t s = 0; s < strands_.size(); ++s) {
    for (int f = 0; f < num_faces(); ++f) {
      if (!left_[s][f]) continue;
      out[f].push_back(mode == LabelMode::Source ? strands_[s].source : strands_[s].target);
    }
  }
  for (auto& l : out) std::sort(l.begin(), l.end());
  return out;
}

}  // namespace ptw
