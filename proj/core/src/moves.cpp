#include "ptw/moves.hpp"

#include <algorithm>
#include <set>

#include "editor.hpp"
#include "ptw/embedding.hpp"
#include "ptw/errors.hpp"

namespace ptw {
namespace {

using detail::Editor;

const std::pair<MoveKind, const char*> kNames[] = {
    {MoveKind::Contract, "contract"},
    {MoveKind::Expand, "expand"},
    {MoveKind::BoundaryRemove, "boundary-remove"},
    {MoveKind::BoundaryAdd, "boundary-add"},
    {MoveKind::UrbanRenewal, "urban-renewal"},
};

[[noreturn]] void not_applicable(const Move& m, const std::string& why) {
  throw MathError(std::string(move_kind_name(m.kind)) + " does not apply at " + m.site + ": " + why,
                  m.site);
}

MoveResult finish(Editor& ed) {
  auto [g, z] = ed.finish();
  return MoveResult{std::move(g), std::move(z), "", Rational(1)};
}

MoveResult contract(const PlabicGraph& g, const EdgeWeighting& z, const Move& m) {
  const int w = g.vertex_index(m.site);
  if (g.degree(w) != 2) not_applicable(m, "vertex degree is not 2");
  const int e1 = g.rotation[w][0];
  const int e2 = g.rotation[w][1];
  const int a = g.other_end(e1, w);
  const int c = g.other_end(e2, w);
  if (PlabicGraph::is_boundary(a) || PlabicGraph::is_boundary(c)) not_applicable(m, "neighbour is a boundary vertex");
  if (a == c) not_applicable(m, "both edges lead to the same vertex");

  Editor ed(g, z);
  auto& zz = ed.weights();
  const Rational from_a = z[e1];
  const Rational from_c = z[e2];
  for (int e : g.rotation[a]) {
    if (e != e1) zz[e] *= from_c;
  }
  std::vector<int> moved;
  const int deg_c = g.degree(c);
  const int pc = ed.position(c, e2);
  for (int j = 1; j < deg_c; ++j) {
    const int e = g.rotation[c][(pc + j) % deg_c];
    zz[e] *= from_a;
    ed.set_end(e, c, a);
    moved.push_back(e);
  }
  ed.splice_rotation(a, e1, moved);
  ed.remove_vertex(w);
  ed.remove_vertex(c);
  ed.remove_edge(e1);
  ed.remove_edge(e2);
  return finish(ed);
}

MoveResult expand(const PlabicGraph& g, const EdgeWeighting& z, const Move& m) {
  const int v = g.vertex_index(m.site);
  const int deg = g.degree(v);
  std::set<int> block;
  for (const auto& id : m.edges) block.insert(g.edge_index(id));
  const int size = static_cast<int>(block.size());
  if (size == 0 || size >= deg) not_applicable(m, "block must be a proper non-empty set of incident edges");
  const auto& rot = g.rotation[v];
  int start = -1;
  for (int p = 0; p < deg; ++p) {
    if (block.count(rot[p]) && !block.count(rot[(p + deg - 1) % deg])) {
      if (start != -1) not_applicable(m, "block is not contiguous");
      start = p;
    }
  }
  if (start == -1) not_applicable(m, "block edges are not incident to the vertex");
  for (int j = 0; j < size; ++j) {
    if (!block.count(rot[(start + j) % deg])) not_applicable(m, "block is not contiguous");
  }

  Editor ed(g, z);
  const Color col = g.colors[v];
  const int c = ed.add_vertex(m.site + "x", col);
  const int w = ed.add_vertex(m.site + "y", opposite(col));
  const std::string& cid = ed.graph().vertex_ids[c];
  const std::string& wid = ed.graph().vertex_ids[w];
  const int ev = ed.add_edge(m.site + wid, v, w, Rational(1));
  const int ec = ed.add_edge(wid + cid, w, c, Rational(1));
  std::vector<int> kept{ev}, moved;
  for (int j = 0; j < deg; ++j) {
    const int e = rot[(start + j) % deg];
    if (j < size) {
      ed.set_end(e, v, c);
      moved.push_back(e);
    } else {
      kept.push_back(e);
    }
  }
  moved.push_back(ec);
  auto& rotation = ed.graph().rotation;
  rotation[v] = kept;
  rotation[c] = moved;
  rotation[w] = {ev, ec};
  return finish(ed);
}

MoveResult boundary_remove(const PlabicGraph& g, const EdgeWeighting& z, const Move& m) {
  const int w = g.vertex_index(m.site);
  if (g.degree(w) != 2) not_applicable(m, "vertex degree is not 2");
  int leg = g.rotation[w][0];
  int inner = g.rotation[w][1];
  if (!g.is_leg(leg)) std::swap(leg, inner);
  if (!g.is_leg(leg) || g.is_leg(inner)) not_applicable(m, "vertex needs exactly one boundary edge");
  const int a = g.other_end(inner, w);

  Editor ed(g, z);
  auto& zz = ed.weights();
  for (int e : g.rotation[a]) {
    if (e != inner) zz[e] *= z[leg];
  }
  zz[leg] = z[inner];
  ed.set_end(leg, w, a);
  ed.splice_rotation(a, inner, {leg});
  ed.remove_vertex(w);
  ed.remove_edge(inner);
  return finish(ed);
}

MoveResult boundary_add(const PlabicGraph& g, const EdgeWeighting& z, const Move& m) {
  int i = 0;
  try {
    std::size_t used = 0;
    i = std::stoi(m.site, &used);
    if (used != m.site.size()) throw std::invalid_argument(m.site);
  } catch (const std::exception&) {
    throw InputError("boundary-add site must be a boundary label: " + m.site);
  }
  if (i < 1 || i > g.n) throw InputError("boundary label out of range: " + m.site);
  const int leg = g.leg(i);
  const int u = g.boundary_neighbor(i);
  if (g.degree(u) < 2) not_applicable(m, "boundary vertex carries a lollipop");

  Editor ed(g, z);
  const int w = ed.add_vertex("b" + m.site, opposite(g.colors[u]));
  const int e1 = ed.add_edge(g.vertex_ids[u] + ed.graph().vertex_ids[w], u, w, z[leg]);
  ed.weights()[leg] = Rational(1);
  ed.set_end(leg, u, w);
  ed.splice_rotation(u, leg, {e1});
  ed.graph().rotation[w] = {leg, e1};
  return finish(ed);
}

MoveResult urban_renewal(const PlabicGraph& g, const EdgeWeighting& z, const Move& m) {
  const Embedding emb(g);
  const Face& face = emb.faces()[emb.face_index(m.site)];
  if (face.boundary) not_applicable(m, "face touches the boundary");
  if (face.half_edges.size() != 4) not_applicable(m, "face is not a square");
  int x[4], sq[4];
  Rational b[4];
  for (int j = 0; j < 4; ++j) {
    x[j] = emb.tail(face.half_edges[j]);
    sq[j] = face.half_edges[j] / 2;
    b[j] = z[sq[j]];
  }
  for (int j = 0; j < 4; ++j) {
    if (g.degree(x[j]) < 3) not_applicable(m, "square vertex of degree below 3");
    for (int l = j + 1; l < 4; ++l) {
      if (x[j] == x[l]) not_applicable(m, "square vertices are not distinct");
    }
  }
  const Rational s = b[0] * b[2] + b[1] * b[3];
  if (s == 0) not_applicable(m, "weights make the renewal singular");

  Editor ed(g, z);
  int y[4], spoke[4], inner[4];
  for (int j = 0; j < 4; ++j) {
    y[j] = ed.add_vertex(g.vertex_ids[x[j]] + "r", opposite(g.colors[x[j]]));
    spoke[j] = ed.add_edge(g.vertex_ids[x[j]] + ed.graph().vertex_ids[y[j]], x[j], y[j], Rational(1));
  }
  for (int j = 0; j < 4; ++j) {
    const int next = (j + 1) % 4;
    const Rational weight = b[(j + 2) % 4] / s;
    inner[j] = ed.add_edge(ed.graph().vertex_ids[y[j]] + ed.graph().vertex_ids[y[next]], y[j], y[next], weight);
  }
  for (int j = 0; j < 4; ++j) {
    const int before = sq[(j + 3) % 4];
    const auto& rot = g.rotation[x[j]];
    const int deg = g.degree(x[j]);
    const int p = ed.position(x[j], before);
    if (rot[(p + 1) % deg] != sq[j]) throw MathError("square corner is not consecutive", m.site);
    std::vector<int> fresh{spoke[j]};
    for (int l = 2; l < deg; ++l) fresh.push_back(rot[(p + l) % deg]);
    ed.graph().rotation[x[j]] = fresh;
    ed.graph().rotation[y[j]] = {inner[(j + 3) % 4], inner[j], spoke[j]};
  }
  for (int e : sq) ed.remove_edge(e);

  MoveResult out = finish(ed);
  const auto least = std::min_element(out.graph.vertex_ids.begin(), out.graph.vertex_ids.end());
  const int v = static_cast<int>(least - out.graph.vertex_ids.begin());
  gauge_at_vertex(out.graph, out.weights, v, s);
  out.gauge_vertex = *least;
  out.gauge_factor = s;
  return out;
}

}  // namespace

const char* move_kind_name(MoveKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "?";
}

MoveKind parse_move_kind(const std::string& name) {
  for (const auto& [k, text] : kNames) {
    if (name == text) return k;
  }
  throw InputError("unknown move kind: " + name);
}

MoveResult apply_move(const PlabicGraph& g, const EdgeWeighting& z, const Move& move) {
  check_weighting(g, z);
  switch (move.kind) {
    case MoveKind::Contract: return contract(g, z, move);
    case MoveKind::Expand: return expand(g, z, move);
    case MoveKind::BoundaryRemove: return boundary_remove(g, z, move);
    case MoveKind::BoundaryAdd: return boundary_add(g, z, move);
    case MoveKind::UrbanRenewal: return urban_renewal(g, z, move);
  }
  throw InputError("unknown move kind");
}

MoveResult apply_moves(const PlabicGraph& g, const EdgeWeighting& z, const std::vector<Move>& moves) {
  MoveResult cur{g, z, "", Rational(1)};
  for (const Move& m : moves) {
    MoveResult next = apply_move(cur.graph, cur.weights, m);
    if (next.gauge_vertex.empty()) {
      next.gauge_vertex = cur.gauge_vertex;
      next.gauge_factor = cur.gauge_factor;
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Move> applicable_moves(const PlabicGraph& g) {
  std::vector<Move> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const std::string& id = g.vertex_ids[v];
    if (g.degree(v) == 2) {
      const int a = g.other_end(g.rotation[v][0], v);
      const int c = g.other_end(g.rotation[v][1], v);
      const int legs = PlabicGraph::is_boundary(a) + PlabicGraph::is_boundary(c);
      if (legs == 0 && a != c) out.push_back({MoveKind::Contract, id, {}});
      if (legs == 1) out.push_back({MoveKind::BoundaryRemove, id, {}});
    }
    if (g.degree(v) >= 3) out.push_back({MoveKind::Expand, id, {g.edge_ids[g.rotation[v][0]]}});
  }
  for (int i = 1; i <= g.n; ++i) {
    if (g.degree(g.boundary_neighbor(i)) >= 2) out.push_back({MoveKind::BoundaryAdd, std::to_string(i), {}});
  }
  const Embedding emb(g);
  for (const Face& f : emb.faces()) {
    if (f.boundary || f.half_edges.size() != 4) continue;
    std::set<int> verts;
    bool ok = true;
    for (int h : f.half_edges) {
      const int x = emb.tail(h);
      verts.insert(x);
      ok = ok && !PlabicGraph::is_boundary(x) && g.degree(x) >= 3;
    }
    if (ok && verts.size() == 4) out.push_back({MoveKind::UrbanRenewal, f.id, {}});
  }
  return out;
}

}  // namespace ptw
