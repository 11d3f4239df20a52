#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ptw/bridges.hpp"
#include "ptw/errors.hpp"
#include "ptw/incidence.hpp"
#include "ptw/io.hpp"
#include "ptw/poset.hpp"

using namespace ptw;

namespace {

const std::vector<std::string> kReduced{"square4", "schubert36", "d4", "chamber", "nonplucker36", "tri3", "tri6"};

Embedding load(const std::string& name) { return Embedding(io::load_graph(oracle::fixture(name + ".json"))); }

int face_with_label(const Embedding& emb, const Subset& s, LabelMode mode) {
  const auto labels = emb.labels(mode);
  for (int f = 0; f < emb.num_faces(); ++f) {
    if (labels[f] == s) return f;
  }
  return -1;
}

}  // namespace

TEST(Incidence, BlockProductsAreIdentity) {
  for (const auto& name : kReduced) {
    const Embedding emb = load(name);
    for (Direction dir : {Direction::Forward, Direction::Reverse}) {
      const IncidenceData d = incidence_data(emb, dir);
      EXPECT_TRUE(is_identity(multiply(block_left(d), block_right(d)))) << name;
      EXPECT_TRUE(is_identity(multiply(block_right(d), block_left(d)))) << name;
    }
  }
}

TEST(Incidence, AdjacentFaceTouchesTheEdge) {
  for (const auto& name : kReduced) {
    const Embedding emb = load(name);
    for (Direction dir : {Direction::Forward, Direction::Reverse}) {
      const IncidenceData d = incidence_data(emb, dir);
      for (int e = 0; e < d.E; ++e) {
        const auto& edges = emb.faces()[d.adjacent_face[e]].edges;
        EXPECT_NE(std::find(edges.begin(), edges.end(), e), edges.end()) << name;
      }
    }
  }
}

TEST(Extremal, BoundariesAreFaceLabels) {
  for (const auto& name : kReduced) {
    const Embedding emb = load(name);
    const auto source = emb.labels(LabelMode::Source);
    const auto target = emb.labels(LabelMode::Target);
    const IncidenceData down = incidence_data(emb, Direction::Forward);
    const IncidenceData up = incidence_data(emb, Direction::Reverse);
    for (int f = 0; f < emb.num_faces(); ++f) {
      const Matching md = extremal_matching(emb, down, f);
      const Matching mu = extremal_matching(emb, up, f);
      EXPECT_EQ(md.boundary, source[f]) << name << " " << emb.faces()[f].id;
      EXPECT_EQ(mu.boundary, target[f]) << name << " " << emb.faces()[f].id;
      check_matching(emb.graph(), md.edges);
      check_matching(emb.graph(), mu.edges);
    }
  }
}

TEST(Extremal, BoundaryFaceMatchingIsTheOnlyOne) {
  for (const auto& name : kReduced) {
    const Embedding emb = load(name);
    const auto source = emb.labels(LabelMode::Source);
    for (int f = 0; f < emb.num_faces(); ++f) {
      if (!emb.faces()[f].boundary) continue;
      EXPECT_EQ(count_matchings(emb.graph(), source[f]), 1u) << name;
    }
  }
}

TEST(Lattice, SwivelPosetsOfSmallFixtures) {
  for (const auto& name : {"square4", "schubert36", "d4"}) {
    const Embedding emb = load(name);
    const IncidenceData down = incidence_data(emb);
    const Positroid m = graph_positroid(emb.graph());
    for (const Subset& b : m.bases) {
      const MatchingPoset p = matching_poset(emb, down, b);
      ASSERT_TRUE(p.connected) << name << " " << format_subset(b);
      ASSERT_TRUE(p.acyclic);
      ASSERT_GE(p.minimum, 0);
      ASSERT_GE(p.maximum, 0);
      ASSERT_TRUE(p.is_lattice());
      const int face = face_with_label(emb, b, LabelMode::Source);
      if (face >= 0) {
        std::vector<int> lo = p.nodes[p.minimum].edges, want = extremal_matching(emb, down, face).edges;
        std::sort(lo.begin(), lo.end());
        std::sort(want.begin(), want.end());
        EXPECT_EQ(lo, want) << name << " " << format_subset(b);
      }
    }
  }
}

TEST(Lattice, DistributiveOnSchubertBoundaries) {
  const Embedding emb = load("schubert36");
  const IncidenceData down = incidence_data(emb);
  for (const Subset& b : graph_positroid(emb.graph()).bases) {
    const MatchingPoset p = matching_poset(emb, down, b);
    const int size = static_cast<int>(p.nodes.size());
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        for (int z = 0; z < size; ++z) {
          ASSERT_EQ(p.meet(x, p.join(y, z)), p.join(p.meet(x, y), p.meet(x, z)));
        }
      }
    }
  }
}

// The reference matching, by edge id. Its boundary is 356 in the fixture
// labelling and 236 in a rotated one.
TEST(Lattice, ReferencePosetHasFiveElements) {
  const Embedding emb = load("schubert36");
  const PlabicGraph& g = emb.graph();
  std::vector<int> reference;
  for (const char* id : {"d", "a", "f", "h", "o", "r", "u", "p"}) reference.push_back(g.edge_index(id));
  check_matching(g, reference);
  const Subset b = matching_boundary(g, reference);
  EXPECT_EQ(b, (Subset{3, 5, 6}));
  const MatchingPoset p = matching_poset(emb, incidence_data(emb), b);
  EXPECT_EQ(p.nodes.size(), 5u);
  EXPECT_EQ(p.covers.size(), 5u);
  sort_by_id(g, reference);
  bool found = false;
  for (const auto& m : p.nodes) found = found || m.edges == reference;
  EXPECT_TRUE(found);
}

TEST(Swivel, UpThenDownIsIdentity) {
  const Embedding emb = load("d4");
  const IncidenceData down = incidence_data(emb);
  int swivels = 0;
  for (const Matching& m : enumerate_matchings(emb.graph())) {
    for (int f = 0; f < emb.num_faces(); ++f) {
      if (emb.faces()[f].boundary) continue;
      const auto dir = swivel_direction(emb, down, m, f);
      if (!dir) continue;
      const Matching moved = swivel(emb, down, m, f, *dir);
      EXPECT_EQ(moved.boundary, m.boundary);
      const auto back_dir = swivel_direction(emb, down, moved, f);
      ASSERT_TRUE(back_dir.has_value());
      EXPECT_NE(*back_dir, *dir);
      EXPECT_EQ(swivel(emb, down, moved, f, *back_dir).edges, m.edges);
      ++swivels;
    }
  }
  EXPECT_GT(swivels, 0);
}

TEST(Lattice, RejectsUnmatchableBoundary) {
  const Embedding emb = load("schubert36");
  EXPECT_THROW(matching_poset(emb, incidence_data(emb), {1, 2, 3}), MathError);
}
