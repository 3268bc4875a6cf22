// Copyright 2026 The chipfire Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "chipfire.hpp"
#include "test_util.hpp"

namespace cf = chipfire;
using cf::Multigraph;
using cf::VertexSet;

namespace {

TEST(EdgeList, SingleEdge) {
  auto g = Multigraph::from_edge_list(2, {{0, 1, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.multiplicity(1, 0), 1u);
}

TEST(EdgeList, MultiplicitiesSum) {
  auto g = Multigraph::from_edge_list(3, {{0, 1, 2}, {1, 2, 1}});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_FALSE(g.is_simple());
}

TEST(EdgeList, RepeatedPairsAccumulate) {
  auto g = Multigraph::from_edge_list(3, {{0, 1, 1}, {1, 0, 2}});
  EXPECT_EQ(g.multiplicity(0, 1), 3u);
}

TEST(EdgeList, FourCycle) {
  auto g = Multigraph::from_edge_list(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  EXPECT_EQ(cf::edge_connectivity(g), 2u);
}

TEST(EdgeList, Rejects) {
  EXPECT_THROW(Multigraph::from_edge_list(2, {{1, 1, 1}}), cf::ValidationError);
  EXPECT_THROW(Multigraph::from_edge_list(2, {{0, 2, 1}}), cf::ValidationError);
  EXPECT_THROW(Multigraph::from_edge_list(2, {{0, 1, 0}}), cf::ValidationError);
  EXPECT_THROW(Multigraph::from_edge_list(0, {}), cf::ValidationError);
}

TEST(Generators, Hypercube) {
  auto q = cf::gen::hypercube(3);
  EXPECT_EQ(q.vertex_count(), 8u);
  EXPECT_EQ(q.edge_count(), 12u);
}

TEST(Generators, CompleteBipartiteConnectivity) {
  EXPECT_EQ(cf::edge_connectivity(cf::gen::complete_bipartite(3, 3)), 3u);
}

TEST(Generators, CycleTwoIsDoubledEdge) {
  auto c = cf::gen::cycle(2);
  EXPECT_EQ(c.vertex_count(), 2u);
  EXPECT_EQ(c.multiplicity(0, 1), 2u);
}

TEST(Generators, ZeroSizesRejected) {
  EXPECT_THROW(cf::gen::path(0), cf::ValidationError);
  EXPECT_THROW(cf::gen::cycle(1), cf::ValidationError);
  EXPECT_THROW(cf::gen::complete(0), cf::ValidationError);
  EXPECT_THROW(cf::gen::complete_multipartite({2, 0}), cf::ValidationError);
  EXPECT_THROW(cf::gen::grid({3, 0}), cf::ValidationError);
}

TEST(Generators, GridIsProductOfPaths) {
  EXPECT_EQ(cf::gen::grid({3, 4}),
            cf::cartesian_product(cf::gen::path(3), cf::gen::path(4)));
}

TEST(Generators, RandomAreSeeded) {
  EXPECT_EQ(cf::gen::random_tree(9, 5), cf::gen::random_tree(9, 5));
  EXPECT_TRUE(cf::is_tree(cf::gen::random_tree(9, 5)));
  EXPECT_EQ(cf::gen::random_graph(8, 0.5, 3), cf::gen::random_graph(8, 0.5, 3));
}

TEST(Product, SquareOfPaths) {
  auto g = cf::cartesian_product(cf::gen::path(2), cf::gen::path(2));
  EXPECT_TRUE(cf::is_cycle(g));
  EXPECT_EQ(g.vertex_count(), 4u);
}

TEST(Product, TriangleTimesEdge) {
  auto g = cf::cartesian_product(cf::gen::complete(3), cf::gen::complete(2));
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 9u);
}

TEST(Product, ThreeEdgesMakeTheCube) {
  auto k2 = cf::gen::complete(2);
  auto g = cf::cartesian_product(cf::cartesian_product(k2, k2), k2);
  EXPECT_TRUE(oracle::isomorphic(g, cf::gen::hypercube(3)));
}

TEST(Product, EdgeCountAndSwap) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto g = oracle::random_multigraph(2 + s % 4, 0.6, s);
    auto h = oracle::random_multigraph(2 + (s / 4) % 3, 0.6, s + 100);
    auto p = cf::cartesian_product(g, h);
    EXPECT_EQ(p.edge_count(), g.vertex_count() * h.edge_count() +
                                  h.vertex_count() * g.edge_count());
    auto q = cf::cartesian_product(h, g);
    const cf::ProductLayout gh{g.vertex_count(), h.vertex_count()};
    const cf::ProductLayout hg{h.vertex_count(), g.vertex_count()};
    for (cf::Vertex a = 0; a < p.vertex_count(); ++a)
      for (cf::Vertex b = 0; b < p.vertex_count(); ++b)
        ASSERT_EQ(p.multiplicity(a, b),
                  q.multiplicity(hg.vertex(gh.h_coord(a), gh.g_coord(a)),
                                 hg.vertex(gh.h_coord(b), gh.g_coord(b))));
  }
}

TEST(CanonicalCopy, Examples) {
  const cf::ProductLayout k3k2{3, 2};
  EXPECT_EQ(cf::canonical_copy(k3k2, cf::Factor::kG, 0), VertexSet(6, {0, 2, 4}));
  const cf::ProductLayout p2p3{2, 3};
  EXPECT_EQ(cf::canonical_copy(p2p3, cf::Factor::kH, 1).size(), 3u);
  EXPECT_THROW(cf::canonical_copy(k3k2, cf::Factor::kG, 2), cf::ValidationError);
}

TEST(CanonicalCopy, CubeSplitsIntoTwoSquares) {
  auto k2 = cf::gen::complete(2);
  auto sq = cf::cartesian_product(k2, k2);
  auto q = cf::cartesian_product(k2, sq);
  const cf::ProductLayout lay{2, 4};
  auto a = cf::canonical_copy(lay, cf::Factor::kH, 0);
  auto b = cf::canonical_copy(lay, cf::Factor::kH, 1);
  EXPECT_FALSE(a.intersects(b));
  EXPECT_TRUE(cf::is_cycle(q.induced(a)));
  EXPECT_TRUE(cf::is_cycle(q.induced(b)));
}

TEST(Cone, Examples) {
  EXPECT_EQ(cf::cone(cf::gen::complete(2), 2), cf::gen::complete(4));
  EXPECT_EQ(cf::cone(cf::gen::path(3), 3).edge_count(), 14u);
  auto c4 = cf::gen::cycle(4);
  EXPECT_EQ(cf::cone(c4, 0), c4);
}

TEST(Cone, DegreeAndIndependence) {
  for (std::uint64_t s = 0; s < 15; ++s) {
    auto g = oracle::random_connected(3 + s % 5, 0.4, s);
    for (std::size_t l = 1; l <= 3; ++l) {
      auto c = cf::cone(g, l);
      EXPECT_GE(cf::min_degree(c), cf::min_degree(g) + l);
      EXPECT_EQ(cf::independence_number(c), cf::independence_number(g));
      EXPECT_EQ(c.edge_count(), g.edge_count() + g.vertex_count() * l + l * (l - 1) / 2);
    }
  }
}

TEST(Invariants, CycleAndTree) {
  auto c5 = cf::gen::cycle(5);
  EXPECT_EQ(cf::edge_connectivity(c5), 2u);
  EXPECT_EQ(cf::vertex_connectivity(c5), 2u);
  EXPECT_EQ(cf::edge_connectivity(cf::gen::random_tree(8, 2)), 1u);
}

TEST(Invariants, CompleteTimesTree) {
  for (std::size_t l = 2; l <= 4; ++l) {
    auto g = cf::cartesian_product(cf::gen::complete(l), cf::gen::random_tree(3, l));
    EXPECT_EQ(cf::vertex_connectivity(g), l);
    EXPECT_EQ(cf::edge_connectivity(g), l);
  }
}

TEST(Invariants, CubeFaceBoundary) {
  // Vertices with top bit clear form a face of the bit-labelled cube.
  EXPECT_EQ(cf::edge_boundary(cf::gen::hypercube(3), VertexSet(8, {0, 1, 2, 3})), 4u);
}

TEST(Invariants, BoundaryRejectsTrivialSets) {
  auto g = cf::gen::cycle(4);
  EXPECT_THROW(cf::edge_boundary(g, VertexSet(4)), cf::ValidationError);
  EXPECT_THROW(cf::edge_boundary(g, VertexSet::full(4)), cf::ValidationError);
}

TEST(Invariants, DisconnectedIsZero) {
  auto g = Multigraph::from_edge_list(4, {{0, 1, 1}, {2, 3, 1}});
  EXPECT_EQ(cf::edge_connectivity(g), 0u);
  EXPECT_EQ(cf::vertex_connectivity(g), 0u);
  EXPECT_EQ(cf::components(g).size(), 2u);
}

TEST(Invariants, CompleteGraphConvention) {
  EXPECT_EQ(cf::vertex_connectivity(cf::gen::complete(5)), 4u);
}

TEST(Invariants, AgainstBruteForce) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto g = oracle::random_multigraph(3 + s % 5, 0.5, s);
    EXPECT_EQ(cf::edge_connectivity(g), oracle::lambda(g)) << s;
    EXPECT_EQ(cf::vertex_connectivity(g), oracle::kappa(g)) << s;
    EXPECT_LE(cf::vertex_connectivity(g), cf::edge_connectivity(g));
    EXPECT_LE(cf::edge_connectivity(g), cf::min_degree(g));
    for (const auto& b : cf::bridges(g)) {
      auto es = g.edges();
      std::erase_if(es, [&](const cf::EdgeSpec& e) { return e.u == b.u && e.v == b.v; });
      EXPECT_FALSE(cf::is_connected(Multigraph::from_edge_list(g.vertex_count(), es)));
    }
  }
}

TEST(Invariants, BoundarySymmetricAndScales) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto g = oracle::random_multigraph(6, 0.5, s);
    auto g2 = g.scaled(2);
    for (std::uint32_t m = 1; m < 63; ++m) {
      auto a = oracle::mask_set(6, m);
      EXPECT_EQ(cf::edge_boundary(g, a), cf::edge_boundary(g, a.complement()));
      EXPECT_EQ(cf::edge_boundary(g2, a), 2 * cf::edge_boundary(g, a));
    }
  }
}

TEST(Independence, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(cf::independence_number(cf::gen::complete(n)), 1u);
  EXPECT_EQ(cf::independence_number(cf::gen::complete_bipartite(2, 5)), 5u);
  EXPECT_EQ(cf::independence_number(cf::gen::cycle(5)), 2u);
}

TEST(Independence, AgainstBruteForce) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto g = cf::gen::random_graph(4 + s % 9, 0.1 + 0.1 * (s % 7), s);
    EXPECT_EQ(cf::independence_number(g), oracle::alpha(g)) << s;
  }
}

TEST(Smoothing, Examples) {
  EXPECT_EQ(cf::smooth_two_valent(cf::gen::path(5)), cf::gen::complete(2));
  auto k4 = cf::gen::complete(4);
  EXPECT_TRUE(oracle::isomorphic(cf::smooth_two_valent(cf::subdivide(k4)), k4));
  EXPECT_EQ(cf::smooth_two_valent(cf::gen::cycle(6)), cf::gen::cycle(2));
  EXPECT_EQ(cf::smooth_two_valent(cf::fixtures::short_tree_product()).vertex_count(), 6u);
}

TEST(Smoothing, IdempotentAndKeepsCycleRank) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto g = cf::subdivide(oracle::random_multigraph(3 + s % 4, 0.5, s));
    auto once = cf::smooth_two_valent(g);
    EXPECT_EQ(cf::smooth_two_valent(once), once);
    EXPECT_EQ(cf::cycle_rank(once), cf::cycle_rank(g));
  }
}

}  // namespace
