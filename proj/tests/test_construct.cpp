#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "fractree/blocks.hpp"
#include "fractree/construct.hpp"
#include "fractree/error.hpp"
#include "fractree/oracles.hpp"
#include "support.hpp"

using namespace fractree;

namespace {

bool isomorphic_to_cycle(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return g.is_connected() && g.edge_count() == g.vertex_count();
}

/// Independent vertex/edge recurrences on machine words.
std::pair<std::uint64_t, std::uint64_t> word_sizes(const FractalParams& p) {
  std::uint64_t u = 1;
  std::uint64_t e = 0;
  const std::uint64_t n = static_cast<std::uint64_t>(p.n);
  const std::uint64_t m = static_cast<std::uint64_t>(p.m);
  for (int k = 0; k <= p.i; ++k) {
    const std::uint64_t u2 = (p.family == Family::Cycle ? n : n + 1) * u + (m - 1) * e;
    const std::uint64_t e2 = (p.family == Family::Cycle ? n : 2 * n) * u + m * e;
    u = u2;
    e = e2;
  }
  return {u, e};
}

} // namespace

TEST(Base, Shapes) {
  EXPECT_EQ(base(Family::Cycle, 4).vertex_count(), 4U);
  EXPECT_EQ(base(Family::Cycle, 4).edge_count(), 4U);
  const Graph w = base(Family::Wheel, 4);
  EXPECT_EQ(w.vertex_count(), 5U);
  EXPECT_EQ(w.edge_count(), 8U);
  EXPECT_EQ(w.info(4).role, VertexRole::BaseHub);
  const Graph k4 = base(Family::Wheel, 3);
  for (VertexId a = 0; a < 4; ++a) {
    for (VertexId b = a + 1; b < 4; ++b) EXPECT_TRUE(k4.has_edge(a, b));
  }
  EXPECT_THROW(base(Family::Cycle, 2), BadN);
  EXPECT_THROW(base(Family::Wheel, 2), BadN);
}

TEST(Ept, CycleDoubling) {
  const Graph c8 = ept(base(Family::Cycle, 4), 2);
  EXPECT_EQ(c8.vertex_count(), 8U);
  EXPECT_TRUE(isomorphic_to_cycle(c8));
  Graph g = base(Family::Cycle, 3);
  for (int k = 1; k <= 4; ++k) {
    g = ept(g, 2);
    EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>(3 << k));
    EXPECT_TRUE(isomorphic_to_cycle(g));
  }
}

TEST(Ept, EdgeBecomesPath) {
  const Graph p = ept(Graph::from_edges(2, {{0, 1}}), 3);
  EXPECT_EQ(p.vertex_count(), 4U);
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{0, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(p.info(2).role, VertexRole::PathInterior);
  EXPECT_THROW(ept(p, 1), UsageError);
}

TEST(Ept, SizeLawOnRandomGraphs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testsupport::random_graph(rng, 1 + trial % 9, 0.4);
    const int m = 2 + trial % 3;
    const Graph h = ept(g, m);
    EXPECT_EQ(h.vertex_count(), g.vertex_count() + static_cast<std::size_t>(m - 1) * g.edge_count());
    EXPECT_EQ(h.edge_count(), static_cast<std::size_t>(m) * g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(h.degree(v), g.degree(v));
  }
}

TEST(Glv, CycleFigure) {
  const Graph c4 = base(Family::Cycle, 4);
  const std::vector<VertexId> all{0, 1, 2, 3};
  const Graph g = glv(c4, Family::Cycle, 4, all);
  EXPECT_EQ(g.vertex_count(), 16U);
  EXPECT_EQ(g.edge_count(), 20U);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 4U);
}

TEST(Glv, SingleVertexGrowsBase) {
  const Graph seed = Graph::from_edges(1, {});
  const std::vector<VertexId> host{0};
  EXPECT_TRUE(isomorphic_to_cycle(glv(seed, Family::Cycle, 5, host)));
  const Graph w = glv(seed, Family::Wheel, 5, host);
  EXPECT_EQ(w.vertex_count(), 6U);
  EXPECT_EQ(w.edge_count(), 10U);
}

TEST(Glv, WheelStageOne) {
  const Graph h = ept(base(Family::Wheel, 4), 2);
  const std::vector<VertexId> originals{0, 1, 2, 3, 4};
  const Graph g = glv(h, Family::Wheel, 4, originals);
  EXPECT_EQ(g.vertex_count(), 33U);
  for (VertexId v : originals) EXPECT_EQ(g.degree(v), h.degree(v) + 3);
}

TEST(Glv, RejectsBadSets) {
  const Graph c = base(Family::Cycle, 3);
  const std::vector<VertexId> twice{0, 0};
  const std::vector<VertexId> outside{5};
  EXPECT_THROW(glv(c, Family::Cycle, 3, twice), InvalidVertexSet);
  EXPECT_THROW(glv(c, Family::Cycle, 3, outside), InvalidVertexSet);
}

TEST(Glv, AttachedCopiesAreBlocks) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 2 + trial % 7, 3);
    const auto hosts = oracle::random_subset(rng, g.vertex_count());
    const Family f = trial % 2 == 0 ? Family::Cycle : Family::Wheel;
    const int n = 3 + trial % 4;
    const Graph h = glv(g, f, n, hosts);
    const BlockShape copy = f == Family::Cycle ? BlockShape(CycleBlock{static_cast<std::size_t>(n)})
                                               : BlockShape(SubdividedWheelBlock{static_cast<std::size_t>(n), 1});
    std::size_t fresh_blocks = 0;
    for (const auto& b : blocks(h)) {
      std::size_t old = 0;
      for (VertexId v : b.vertices) old += v < g.vertex_count() ? 1 : 0;
      if (old < b.vertices.size()) {
        EXPECT_EQ(old, 1U);
        EXPECT_EQ(b.shape, copy);
        ++fresh_blocks;
      }
    }
    EXPECT_EQ(fresh_blocks, hosts.size());
  }
}

TEST(Build, PublishedSizes) {
  const Graph a = build({Family::Cycle, 3, 2, 1});
  EXPECT_EQ(a.vertex_count(), 12U);
  EXPECT_EQ(a.edge_count(), 15U);
  const Graph b = build({Family::Cycle, 3, 2, 2});
  EXPECT_EQ(b.vertex_count(), 51U);
  EXPECT_EQ(b.edge_count(), 66U);
  EXPECT_EQ(build({Family::Wheel, 4, 2, 2}).vertex_count(), 221U);
  EXPECT_EQ(build({Family::Cycle, 5, 3, 0}).edges(), base(Family::Cycle, 5).edges());
}

TEST(Build, SizeLaw) {
  for (Family f : {Family::Cycle, Family::Wheel}) {
    for (int n = 3; n <= 6; ++n) {
      for (int m = 2; m <= 3; ++m) {
        for (int i = 0; i <= 3; ++i) {
          const FractalParams p{f, n, m, i};
          const auto [u, e] = word_sizes(p);
          if (u > 20000) continue;
          const Graph g = build(p);
          EXPECT_EQ(g.vertex_count(), u) << to_string(p);
          EXPECT_EQ(g.edge_count(), e) << to_string(p);
        }
      }
    }
  }
}

TEST(Build, RolesAndBirthStages) {
  const Graph g = build({Family::Wheel, 5, 2, 1});
  std::map<VertexRole, std::size_t> roles;
  for (const auto& info : g.vertices()) ++roles[info.role];
  EXPECT_EQ(roles[VertexRole::OriginalBase], 5U);
  EXPECT_EQ(roles[VertexRole::BaseHub], 1U);
  EXPECT_EQ(roles[VertexRole::PathInterior], 10U);
  EXPECT_EQ(roles[VertexRole::FreshRim], 24U);
  EXPECT_EQ(roles[VertexRole::FreshHub], 6U);
  for (const auto& info : g.vertices()) {
    const bool original = info.role == VertexRole::OriginalBase || info.role == VertexRole::BaseHub;
    EXPECT_EQ(info.birth_stage, original ? 0 : 1);
  }
  for (const auto& info : build({Family::Cycle, 4, 3, 2}).vertices()) {
    EXPECT_NE(info.role, VertexRole::FreshHub);
    EXPECT_NE(info.role, VertexRole::BaseHub);
  }
}

TEST(Build, IdAssignmentOrder) {
  const Graph g = build({Family::Cycle, 3, 2, 1});
  // EPT interiors 3..5 in edge order (0,1), (0,2), (1,2); then copies at hosts 0, 1, 2.
  EXPECT_TRUE(g.has_edge(0, 3) && g.has_edge(3, 1));
  EXPECT_TRUE(g.has_edge(0, 4) && g.has_edge(4, 2));
  EXPECT_TRUE(g.has_edge(1, 5) && g.has_edge(5, 2));
  EXPECT_TRUE(g.has_edge(0, 6) && g.has_edge(6, 7) && g.has_edge(7, 0));
  EXPECT_TRUE(g.has_edge(1, 8) && g.has_edge(8, 9) && g.has_edge(9, 1));
  EXPECT_TRUE(g.has_edge(2, 10) && g.has_edge(10, 11) && g.has_edge(11, 2));
  const Graph w = build({Family::Wheel, 3, 2, 1});
  // Hub of the copy at host 0 comes after its rim vertices.
  const VertexId first_fresh = 4 + 6;
  EXPECT_EQ(w.info(first_fresh).role, VertexRole::FreshRim);
  EXPECT_EQ(w.info(first_fresh + 2).role, VertexRole::FreshHub);
  EXPECT_TRUE(w.has_edge(0, first_fresh));
}

TEST(Build, IsDeterministic) {
  for (Family f : {Family::Cycle, Family::Wheel}) {
    const FractalParams p{f, 4, 3, 2};
    const Graph a = build(p);
    const Graph b = build(p);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.edges(), b.edges());
    EXPECT_EQ(a.vertices(), b.vertices());
  }
}

TEST(Build, SizeCap) {
  EXPECT_THROW(build({Family::Cycle, 3, 2, 3}, 100), SizeCap);
  EXPECT_NO_THROW(build({Family::Cycle, 3, 2, 3}, 219));
  EXPECT_THROW(build({Family::Cycle, 3, 2, 40}), SizeCap);
}

TEST(Build, EnvironmentCap) {
  ::setenv("FRACTREE_MAX_VERTICES", "50", 1);
  EXPECT_EQ(max_vertices_from_env(), 50U);
  EXPECT_THROW(build({Family::Cycle, 3, 2, 2}), SizeCap);
  ::setenv("FRACTREE_MAX_VERTICES", "garbage", 1);
  EXPECT_EQ(max_vertices_from_env(), kDefaultMaxVertices);
  ::unsetenv("FRACTREE_MAX_VERTICES");
  EXPECT_EQ(max_vertices_from_env(), kDefaultMaxVertices);
  EXPECT_NO_THROW(build({Family::Cycle, 3, 2, 2}));
}

TEST(Build, RejectsBadParams) {
  EXPECT_THROW(build({Family::Cycle, 2, 2, 1}), BadN);
  EXPECT_THROW(build({Family::Cycle, 3, 1, 1}), UsageError);
  EXPECT_THROW(build({Family::Wheel, 3, 2, -1}), UsageError);
}

TEST(CopyCensus, PublishedTables) {
  const CopyCensus c = copy_census({Family::Cycle, 3, 2, 2});
  EXPECT_EQ(c.copies, (std::vector<BigInt>{3, 3}));
  EXPECT_EQ(c.central.shape(), BlockShape(CycleBlock{12}));
  const CopyCensus w = copy_census({Family::Wheel, 4, 2, 2});
  EXPECT_EQ(w.copies, (std::vector<BigInt>{8, 5}));
  EXPECT_EQ(w.central.shape(), BlockShape(SubdividedWheelBlock{4, 4}));
  const CopyCensus one = copy_census({Family::Cycle, 7, 3, 1});
  EXPECT_EQ(one.copies, (std::vector<BigInt>{7}));
  EXPECT_EQ(one.central.shape(), BlockShape(CycleBlock{21}));
  EXPECT_THROW(copy_census({Family::Cycle, 3, 2, 0}), UsageError);
}

TEST(CopyCensus, MEqualsThreeNeedsTheExtraFactor) {
  const CopyCensus c = copy_census({Family::Cycle, 3, 3, 2});
  EXPECT_EQ(c.copies, (std::vector<BigInt>{6, 3}));
  // Vertex total from the census: central cycle plus each copy minus its cut vertex.
  const Graph g = build({Family::Cycle, 3, 3, 2});
  const BigInt total = 27 + c.copies[1] * (word_sizes({Family::Cycle, 3, 3, 1}).first - 1) +
                       c.copies[0] * (word_sizes({Family::Cycle, 3, 3, 0}).first - 1);
  EXPECT_EQ(total, static_cast<unsigned long>(g.vertex_count()));
}

TEST(CopyCensus, MatchesStructuralBlocks) {
  for (Family f : {Family::Cycle, Family::Wheel}) {
    for (int n = 3; n <= 6; ++n) {
      for (int m = 2; m <= 3; ++m) {
        for (int i = 0; i <= (f == Family::Cycle ? 3 : 2); ++i) {
          const FractalParams p{f, n, m, i};
          std::map<BlockShape, BigInt> structural;
          for (const auto& [shape, k] : block_shape_counts(blocks(build(p)))) {
            structural[shape] = static_cast<unsigned long>(k);
          }
          EXPECT_EQ(structural, census_block_multiset(p)) << to_string(p);
          EXPECT_EQ(structural, layered_block_multiset(p)) << to_string(p);
        }
      }
    }
  }
}

TEST(CopyCensus, CycleMultisetForStageTwo) {
  const auto ms = layered_block_multiset({Family::Cycle, 3, 2, 2});
  EXPECT_EQ(ms, (std::map<BlockShape, BigInt>{{CycleBlock{3}, 12}, {CycleBlock{6}, 3}, {CycleBlock{12}, 1}}));
}
