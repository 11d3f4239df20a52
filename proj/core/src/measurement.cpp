#include "ptw/measurement.hpp"

#include <algorithm>

#include "ptw/errors.hpp"

namespace ptw {

EdgeWeighting unit_weighting(const PlabicGraph& g) { return EdgeWeighting(g.num_edges(), Rational(1)); }

EdgeWeighting random_weighting(const PlabicGraph& g, WeightRng& rng) {
  EdgeWeighting z;
  z.reserve(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) z.push_back(rng.weight());
  return z;
}

void check_weighting(const PlabicGraph& g, const EdgeWeighting& z) {
  if (static_cast<int>(z.size()) != g.num_edges()) throw MathError("weighting has the wrong number of edges");
  for (int e = 0; e < g.num_edges(); ++e) {
    if (z[e] == 0) throw MathError("edge weights must be nonzero", "edge '" + g.edge_ids[e] + "'");
  }
}

Rational monomial(const std::vector<int>& edges, const EdgeWeighting& z) {
  Rational r(1);
  for (int e : edges) r *= z[e];
  return r;
}

PlueckerVector evaluate(const PartitionFunction& pf, const EdgeWeighting& z) {
  PlueckerVector p;
  p.n = pf.n;
  p.k = pf.k;
  for (const auto& s : k_subsets(pf.n, pf.k)) p.coords[s] = 0;
  for (const auto& [s, matchings] : pf.terms) {
    Rational sum(0);
    for (const auto& m : matchings) sum += monomial(m.edges, z);
    p.coords[s] = sum;
  }
  return p;
}

PlueckerVector measure(const PlabicGraph& g, const EdgeWeighting& z) {
  check_weighting(g, z);
  return evaluate(partition_function(g), z);
}

void gauge_at_vertex(const PlabicGraph& g, EdgeWeighting& z, int v, const Rational& factor) {
  for (int e : g.rotation[v]) z[e] *= factor;
}

EdgeWeighting gauge_apply(const PlabicGraph& g, const EdgeWeighting& z, const GaugeElement& t) {
  if (static_cast<int>(t.size()) != g.num_vertices()) throw MathError("gauge element has the wrong size");
  EdgeWeighting out = z;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (t[v] == 0) throw MathError("gauge values must be nonzero", "vertex '" + g.vertex_ids[v] + "'");
    gauge_at_vertex(g, out, v, t[v]);
  }
  return out;
}

FaceVector face_pluecker(const Embedding& emb, const PlueckerVector& p, LabelMode mode) {
  const auto labels = emb.labels(mode);
  FaceVector x(emb.num_faces());
  for (int f = 0; f < emb.num_faces(); ++f) {
    x[f] = p.at(labels[f]);
    if (x[f] == 0) {
      throw MathError("face coordinate vanishes; the face map is undefined here",
                      "face " + emb.faces()[f].id + " label {" + format_subset(labels[f]) + "}");
    }
  }
  return x;
}

FaceVector face_minors(const Embedding& emb, const Matrix& a, LabelMode mode) {
  const auto labels = emb.labels(mode);
  FaceVector x(emb.num_faces());
  for (int f = 0; f < emb.num_faces(); ++f) {
    x[f] = minor(a, labels[f]);
    if (x[f] == 0) {
      throw MathError("face coordinate vanishes; the face map is undefined here",
                      "face " + emb.faces()[f].id + " label {" + format_subset(labels[f]) + "}");
    }
  }
  return x;
}

FaceVector monomial_map(const Embedding& emb, const IncidenceData& d, const EdgeWeighting& z) {
  FaceVector x(emb.num_faces());
  for (int f = 0; f < emb.num_faces(); ++f) {
    Rational prod(1);
    for (int e = 0; e < d.E; ++e) {
      if (d.U_EF[e][f]) prod *= z[e];
    }
    x[f] = 1 / prod;
  }
  return x;
}

FaceVector monomial_map(const Embedding& emb, const EdgeWeighting& z, Direction dir) {
  return monomial_map(emb, incidence_data(emb, dir), z);
}

BoundaryPartial boundary_partial(const Embedding& emb, const IncidenceData& d, const FaceVector& x) {
  const PlabicGraph& g = emb.graph();
  BoundaryPartial out;
  out.weights.assign(d.E, Rational(1));
  for (int f = 0; f < d.F; ++f) {
    if (x[f] == 0) throw MathError("face coordinates must be nonzero", "face " + emb.faces()[f].id);
    for (int e = 0; e < d.E; ++e) {
      if (d.dFE[f][e]) out.weights[e] /= x[f];
    }
  }
  out.gauge_factor = 1;
  for (int f = 0; f < d.F; ++f) out.gauge_factor *= pow(x[f], d.B[f] - 1);
  out.gauge_vertex = 0;
  if (g.num_vertices() > 0) gauge_at_vertex(g, out.weights, out.gauge_vertex, out.gauge_factor);
  return out;
}

BoundaryPartial boundary_partial(const Embedding& emb, const FaceVector& x, Direction dir) {
  return boundary_partial(emb, incidence_data(emb, dir), x);
}

Monodromy monodromy(const Embedding& emb, const IncidenceData& down, const EdgeWeighting& z, int face) {
  const Face& f = emb.faces()[face];
  if (f.boundary) throw MathError("monodromy is defined only for internal faces", "face " + f.id);
  const PlabicGraph& g = emb.graph();
  std::vector<int> clockwise(f.edges.rbegin(), f.edges.rend());
  int start = -1;
  for (int j = 0; j < static_cast<int>(clockwise.size()); ++j) {
    const int e = clockwise[j];
    if (down.adjacent_face[e] != face) continue;
    if (start < 0 || g.edge_ids[e] < g.edge_ids[clockwise[start]]) start = j;
  }
  Monodromy m;
  m.value = 1;
  for (std::size_t j = 0; j < clockwise.size(); ++j) {
    const int e = clockwise[(start + j) % clockwise.size()];
    const int exponent = j % 2 == 0 ? -1 : 1;
    m.edges.push_back(e);
    m.exponents.push_back(exponent);
    m.value *= exponent < 0 ? 1 / z[e] : z[e];
  }
  return m;
}

std::vector<LaurentTerm> twisted_pluecker_laurent(const Embedding& emb, const IncidenceData& down,
                                                  const Subset& j) {
  std::vector<LaurentTerm> terms;
  for (auto& m : enumerate_matchings(emb.graph(), j)) {
    auto exps = face_exponents(down, m);
    for (auto& x : exps) x = -x;
    terms.push_back({std::move(m), std::move(exps)});
  }
  return terms;
}

Rational evaluate_laurent(const std::vector<LaurentTerm>& terms, const FaceVector& x) {
  Rational sum(0);
  for (const auto& t : terms) {
    Rational prod(1);
    for (std::size_t f = 0; f < x.size(); ++f) {
      if (t.exponents[f]) prod *= pow(x[f], t.exponents[f]);
    }
    sum += prod;
  }
  return sum;
}

namespace {

std::string describe(const PlabicGraph& g, const EdgeWeighting& z) {
  std::string s;
  for (int e = 0; e < g.num_edges(); ++e) s += (e ? "," : "") + g.edge_ids[e] + "=" + to_string(z[e]);
  return s;
}

// Tries to write b = t.a for a gauge element t with product one. Every leg fixes
// the value at its vertex, and connectivity to the boundary fixes the rest.
bool related_by_unit_gauge(const PlabicGraph& g, const EdgeWeighting& a, const EdgeWeighting& b) {
  const int V = g.num_vertices();
  std::vector<Rational> t(V);
  std::vector<char> known(V, 0);
  std::vector<int> stack;
  for (int i = 1; i <= g.n; ++i) {
    const int e = g.leg(i);
    const int v = g.other_end(e, -i);
    const Rational value = b[e] / a[e];
    if (known[v] && t[v] != value) return false;
    if (!known[v]) {
      known[v] = 1;
      t[v] = value;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : g.rotation[v]) {
      const int w = g.other_end(e, v);
      if (PlabicGraph::is_boundary(w)) continue;
      const Rational value = b[e] / a[e] / t[v];
      if (!known[w]) {
        known[w] = 1;
        t[w] = value;
        stack.push_back(w);
      } else if (t[w] != value) {
        return false;
      }
    }
  }
  Rational product(1);
  for (const auto& q : t) product *= q;
  return product == 1;
}

bool same_matching_monomials(const PlabicGraph& g, const PartitionFunction& pf, const EdgeWeighting& a,
                             const EdgeWeighting& b) {
  if (related_by_unit_gauge(g, a, b)) return true;
  for (const auto& [s, matchings] : pf.terms) {
    for (const auto& m : matchings) {
      if (monomial(m.edges, a) != monomial(m.edges, b)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<CheckResult> verify_diagram(const Embedding& emb, std::uint64_t seed, int trials) {
  const PlabicGraph& g = emb.graph();
  const auto pf = partition_function(g);
  const auto down = incidence_data(emb, Direction::Forward);
  const auto up = incidence_data(emb, Direction::Reverse);
  std::vector<Subset> bases;
  for (const auto& [s, ms] : pf.terms) bases.push_back(s);

  WeightRng rng(seed);
  std::vector<CheckResult> report;
  for (int trial = 0; trial < trials; ++trial) {
    const EdgeWeighting z = random_weighting(g, rng);
    const std::string weights = describe(g, z);
    std::vector<Subset> chosen;
    for (int r = 0; r < 3; ++r) chosen.push_back(bases[rng.below(bases.size())]);

    auto run = [&](const std::string& name, auto&& body) {
      CheckResult result{name, trial, false, {}};
      try {
        result.pass = body();
      } catch (const MathError& err) {
        result.witness = std::string(err.what()) + (err.witness().empty() ? "" : " (" + err.witness() + ")") + "; ";
      }
      if (!result.pass) result.witness += "weights " + weights;
      report.push_back(std::move(result));
    };

    const PlueckerVector p = evaluate(pf, z);
    const Matrix a = matrix_from_pluecker(p);
    const Matrix right = twist(a, Side::Right);
    const Matrix left = twist(a, Side::Left);

    run("right-square", [&] { return monomial_map(emb, down, z) == face_minors(emb, right, LabelMode::Source); });
    run("left-square", [&] { return monomial_map(emb, up, z) == face_minors(emb, left, LabelMode::Target); });
    run("inversion", [&] {
      const auto fwd = boundary_partial(emb, down, face_minors(emb, right, LabelMode::Source));
      const auto rev = boundary_partial(emb, up, face_minors(emb, left, LabelMode::Target));
      return same_matching_monomials(g, pf, fwd.weights, z) && same_matching_monomials(g, pf, rev.weights, z);
    });
    run("laurent", [&] {
      const FaceVector x = face_pluecker(emb, p, LabelMode::Source);
      for (const auto& j : chosen) {
        if (evaluate_laurent(twisted_pluecker_laurent(emb, down, j), x) != minor(left, j)) return false;
      }
      return true;
    });
  }
  return report;
}

}  // namespace ptw
