#include "ptw/bridges.hpp"

#include <algorithm>

#include "editor.hpp"
#include "ptw/embedding.hpp"
#include "ptw/errors.hpp"
#include "ptw/subset.hpp"

namespace ptw {

using detail::Editor;

namespace {

const std::pair<StepKind, const char*> kStepNames[] = {
    {StepKind::BlackLollipop, "black-lollipop"},
    {StepKind::WhiteLollipop, "white-lollipop"},
    {StepKind::LeftBridge, "left-bridge"},
    {StepKind::RightBridge, "right-bridge"},
};

}  // namespace

const char* step_kind_name(StepKind kind) {
  for (const auto& [k, name] : kStepNames) {
    if (k == kind) return name;
  }
  return "?";
}

StepKind parse_step_kind(const std::string& name) {
  for (const auto& [k, text] : kStepNames) {
    if (name == text) return k;
  }
  throw InputError("unknown step kind: " + name);
}

WeightedGraph add_lollipop(const PlabicGraph& g, const EdgeWeighting& z, int i, Color color,
                           const Rational& t) {
  if (i < 1 || i > g.n + 1) throw InputError("lollipop position out of range");
  if (t == 0) throw MathError("lollipop weight must be nonzero", "0");
  Editor ed(g, z);
  auto& out = ed.graph();
  out.n = g.n + 1;
  for (auto& ends : out.ends) {
    for (int& node : ends) {
      if (PlabicGraph::is_boundary(node) && -node >= i) --node;
    }
  }
  const int v = ed.add_vertex("v" + std::to_string(g.num_vertices() + 1), color);
  const int e = ed.add_edge("e" + std::to_string(g.num_edges() + 1), v, PlabicGraph::boundary_node(i), t);
  out.rotation[v] = {e};
  auto [graph, weights] = ed.finish();
  return {std::move(graph), std::move(weights)};
}

bool bridge_is_legal(const AffinePerm& pi, int i, Side side) {
  if (side == Side::Left) return pi.inverse(i) > pi.inverse(i + 1);
  return pi(i) > pi(i + 1);
}

WeightedGraph add_bridge(const PlabicGraph& g, const EdgeWeighting& z, int i, Side side, const Rational& t) {
  const int n = g.n;
  if (n < 2) throw MathError("bridges need at least two boundary vertices", std::to_string(n));
  if (i < 1 || i > n) throw InputError("bridge position out of range");
  if (t == 0) throw MathError("bridge weight must be nonzero", "0");
  const AffinePerm pi = Embedding(g).trip_permutation();
  if (!bridge_is_legal(pi, i, side)) {
    throw MathError("illegal bridge: length does not drop by one", "i=" + std::to_string(i));
  }
  const int next = i % n + 1;
  const Color near_i = side == Side::Left ? Color::Black : Color::White;

  Editor ed(g, z);
  struct End {
    int vertex;
    bool inserted;
    int old_leg;
    int new_leg;
  };
  auto endpoint = [&](int p, Color want) {
    const int u = g.boundary_neighbor(p);
    const int leg = g.leg(p);
    if (g.colors[u] == want) return End{u, false, leg, leg};
    if (g.degree(u) < 2) {
      throw MathError("illegal bridge: endpoint would isolate a lollipop", g.vertex_ids[u]);
    }
    const int x = ed.add_vertex("v" + std::to_string(ed.graph().num_vertices() + 1), want);
    ed.set_end(leg, PlabicGraph::boundary_node(p), x);
    const int fresh = ed.add_edge("e" + std::to_string(ed.graph().num_edges() + 1), x,
                                  PlabicGraph::boundary_node(p), Rational(1));
    return End{x, true, leg, fresh};
  };
  const End a = endpoint(i, near_i);
  const End b = endpoint(next, opposite(near_i));
  const int bridge = ed.add_edge("e" + std::to_string(ed.graph().num_edges() + 1), a.vertex, b.vertex, t);
  auto& rot = ed.graph().rotation;
  if (a.inserted) {
    rot[a.vertex] = {a.old_leg, a.new_leg, bridge};
  } else {
    const int p = ed.position(a.vertex, a.new_leg);
    rot[a.vertex].insert(rot[a.vertex].begin() + p + 1, bridge);
  }
  if (b.inserted) {
    rot[b.vertex] = {b.old_leg, bridge, b.new_leg};
  } else {
    const int p = ed.position(b.vertex, b.new_leg);
    rot[b.vertex].insert(rot[b.vertex].begin() + p, bridge);
  }
  auto [graph, weights] = ed.finish();
  return {std::move(graph), std::move(weights)};
}

AffinePerm delete_fixed_point(const AffinePerm& pi, int a) {
  const int n = pi.n();
  if (pi(a) != a && pi(a) != a + n) throw MathError("not a fixed point", std::to_string(a));
  std::vector<int> values;
  for (int j = 1; j < n; ++j) {
    const int x = pi(j < a ? j : j + 1);
    const int r = mod1(x, n);
    const int q = (x - r) / n;
    values.push_back((r < a ? r : r - 1) + q * (n - 1));
  }
  return AffinePerm(n - 1, values);
}

std::vector<int> swap_targets(const AffinePerm& pi, int i) {
  const int n = pi.n();
  const int lo = mod1(i, n);
  const int hi = mod1(i + 1, n);
  std::vector<int> values;
  for (int a = 1; a <= n; ++a) {
    const int x = pi(a);
    const int r = mod1(x, n);
    values.push_back(r == lo ? x + 1 : r == hi ? x - 1 : x);
  }
  return values;
}

namespace {

void plan(const AffinePerm& rho, std::vector<BridgeStep>& steps) {
  const int n = rho.n();
  for (int a = 1; a <= n; ++a) {
    if (rho(a) == a || rho(a) == a + n) {
      if (n > 1) plan(delete_fixed_point(rho, a), steps);
      steps.push_back({rho(a) == a ? StepKind::BlackLollipop : StepKind::WhiteLollipop, a});
      return;
    }
  }
  const int len = length(rho);
  for (int i = 1; i <= n; ++i) {
    if (rho.inverse(i) > rho.inverse(i + 1)) continue;
    const std::vector<int> values = swap_targets(rho, i);
    if (!is_bounded_affine_perm(n, values)) continue;
    const AffinePerm smaller(n, values);
    if (length(smaller) != len + 1) continue;
    plan(smaller, steps);
    steps.push_back({StepKind::LeftBridge, i});
    return;
  }
  std::string text;
  for (int v : rho.values()) text += std::to_string(v) + " ";
  throw MathError("no bridge decomposition step found", text);
}

}  // namespace

PlabicGraph build_from_steps(const std::vector<BridgeStep>& steps) {
  WeightedGraph cur;
  for (const BridgeStep& s : steps) {
    switch (s.kind) {
      case StepKind::BlackLollipop:
        cur = add_lollipop(cur.graph, cur.weights, s.position, Color::Black);
        break;
      case StepKind::WhiteLollipop:
        cur = add_lollipop(cur.graph, cur.weights, s.position, Color::White);
        break;
      case StepKind::LeftBridge:
        cur = add_bridge(cur.graph, cur.weights, s.position, Side::Left);
        break;
      case StepKind::RightBridge:
        cur = add_bridge(cur.graph, cur.weights, s.position, Side::Right);
        break;
    }
  }
  return cur.graph;
}

Synthesis synthesize(const AffinePerm& pi) {
  if (pi.n() < 1) throw InputError("permutation must have n >= 1");
  Synthesis out;
  plan(pi, out.steps);
  out.graph = build_from_steps(out.steps);
  const Embedding emb(out.graph);
  if (!(emb.trip_permutation() == pi) || !emb.is_reduced()) {
    throw MathError("synthesized graph has the wrong trip permutation", "");
  }
  return out;
}

}  // namespace ptw
