// Copyright 2026 The motifcensus Authors.
//
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

#include "test_util.hpp"

namespace motif {
namespace {

using testing::bidirected_of;
using testing::graph_of;

UndirectedSkeleton undirected(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return UndirectedSkeleton::from_edges(n, e);
}

TEST(EdgeSetsUndirected, CompleteGraph) {
  const auto s = undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto sets = edge_sets_undirected(s, 0, 1);
  EXPECT_EQ(sets.n_x, 0u);
  EXPECT_EQ(sets.n_y, 0u);
  EXPECT_EQ(sets.n_z, 2u);
  EXPECT_EQ(sets.m_zz, 1u);
}

TEST(EdgeSetsUndirected, PathCentralEdge) {
  const auto sets = edge_sets_undirected(undirected(4, {{0, 1}, {1, 2}, {2, 3}}), 1, 2);
  EXPECT_EQ(sets.x, std::vector<Vertex>{0});
  EXPECT_EQ(sets.y, std::vector<Vertex>{3});
  EXPECT_TRUE(sets.z.empty());
  EXPECT_EQ(sets.m_xx + sets.m_xy + sets.m_xz + sets.m_yy + sets.m_yz + sets.m_zz, 0u);
}

TEST(EdgeSetsUndirected, Cycle) {
  const auto sets = edge_sets_undirected(undirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 0, 1);
  EXPECT_EQ(sets.x, std::vector<Vertex>{3});
  EXPECT_EQ(sets.y, std::vector<Vertex>{2});
  EXPECT_EQ(sets.m_xy, 1u);
}

TEST(Count4Undirected, SingleShapes) {
  const auto& sh = Shapes4::get();
  const auto k4 = count4_undirected(undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(k4.total(), 1u);
  EXPECT_EQ(k4[sh.clique], 1u);
  const auto p4 = count4_undirected(undirected(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(p4.total(), 1u);
  EXPECT_EQ(p4[sh.path], 1u);
}

TEST(EdgeSetsDirected, BidirectedClique) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = 0; j < 4; ++j)
      if (i != j) e.emplace_back(i, j);
  const auto sets = edge_sets_directed(DirectedGraph::from_edges(4, e), 0, 1);
  const auto aa = static_cast<std::size_t>(edge_set_index("AA"));
  EXPECT_EQ(sets.sets[aa], (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(sets.m_bi[aa][aa], 1u);
  for (const auto& row : sets.m)
    for (auto x : row) EXPECT_EQ(x, 0u);
}

TEST(EdgeSetsDirected, MembershipByRelation) {
  // e = 0->1; 2 with 0->2 and 2->1; 3 with 3->0 only.
  const auto sets = edge_sets_directed(graph_of(4, {{0, 1}, {0, 2}, {2, 1}, {3, 0}}), 0, 1);
  EXPECT_EQ(sets.sets[static_cast<std::size_t>(edge_set_index("BC"))], std::vector<Vertex>{2});
  EXPECT_EQ(sets.sets[static_cast<std::size_t>(edge_set_index("C1"))], std::vector<Vertex>{3});
  EXPECT_EQ(sets.size[static_cast<std::size_t>(edge_set_index("BC"))], 1u);
}

TEST(EdgeSetsDirected, EdgeCountersAreDirectional) {
  // e = 0<->1; 2 in A1, 3 in B2, edge 2->3; 4 in AA, 4<->2.
  const auto g = graph_of(5, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 3}, {2, 3}, {0, 4}, {4, 0}, {1, 4}, {4, 1},
                              {4, 2}, {2, 4}});
  const auto sets = edge_sets_directed(g, 0, 1);
  const auto a1 = static_cast<std::size_t>(edge_set_index("A1")), b2 = static_cast<std::size_t>(edge_set_index("B2")),
             aa = static_cast<std::size_t>(edge_set_index("AA"));
  EXPECT_EQ(sets.m[a1][b2], 1u);
  EXPECT_EQ(sets.m[b2][a1], 0u);
  EXPECT_EQ(sets.m_bi[a1][aa], 1u);
  EXPECT_EQ(sets.m_bi[aa][a1], 1u);
}

TEST(Count4Directed, BidirectedClique) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = 0; j < 4; ++j)
      if (i != j) e.emplace_back(i, j);
  const auto h = count4_directed(DirectedGraph::from_edges(4, e));
  EXPECT_EQ(h.total(), 1u);
  EXPECT_EQ(h[static_cast<ClassId>(class_table(4, true).size() - 1)], 1u);
}

TEST(Count4Directed, MixedStar) {
  const auto g = graph_of(4, {{0, 1}, {1, 2}, {2, 1}, {3, 1}});
  AdjacencyCode c{4, true, 0};
  for (auto [u, v] : g.edges()) c.bits |= 1u << AdjacencyCode::pos(4, static_cast<int>(u), static_cast<int>(v));
  const auto h = count4_directed(g);
  EXPECT_EQ(h.total(), 1u);
  EXPECT_EQ(h[class_table(4, true).class_of(c)], 1u);
}

TEST(Count4Directed, ReversalPermutesClasses) {
  const auto& t = class_table(4, true);
  std::vector<ClassId> reversed(t.size());
  for (std::size_t c = 0; c < t.size(); ++c) reversed[c] = t.class_of(transpose(t.representative(static_cast<ClassId>(c))));
  for (int seed = 0; seed < 10; ++seed) {
    const auto g = testing::random_digraph(30, 3, 0.3, 400 + seed);
    const auto h = count4_directed(g);
    const auto r = count4_directed(reverse_edges(g));
    for (std::size_t c = 0; c < t.size(); ++c) ASSERT_EQ(h.counts[c], r[reversed[c]]);
  }
}

TEST(Count4Directed, PreCorrectionSumsDivide) {
  const auto& t = class_table(4, true);
  for (int seed = 0; seed < 10; ++seed) {
    const auto raw = raw_count4_directed(testing::random_digraph(30, 4, 0.3, 500 + seed));
    for (std::size_t c = 0; c < raw.size(); ++c) ASSERT_EQ(raw[c] % t.divisor(static_cast<ClassId>(c)), 0u);
  }
}

TEST(Count4, MatchesOracleOnRandomGraphs) {
  for (int seed = 0; seed < 50; ++seed) {
    const auto g = testing::random_digraph(5 + seed % 31, 1 + seed % 6, (seed % 3) * 0.5, 4000 + seed);
    for (bool directed : {true, false})
      ASSERT_EQ(census(g, 4, directed), oracle_histogram(g, 4, directed).histogram) << "seed " << seed;
  }
}

TEST(Count4, WorkerCountDoesNotChangeResult) {
  const auto g = testing::random_digraph(300, 4, 0.3, 2);
  EXPECT_EQ(census(g, 4, true, {1, {}}), census(g, 4, true, {8, {}}));
  EXPECT_EQ(census(g, 4, false, {1, {}}), census(g, 4, false, {8, {}}));
}

}  // namespace
}  // namespace motif
