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

ClassId class3(std::initializer_list<std::pair<int, int>> edges) {
  AdjacencyCode c{3, true, 0};
  for (auto [i, j] : edges) c.bits |= 1u << AdjacencyCode::pos(3, i, j);
  return class_table(3, true).class_of(c);
}

UndirectedSkeleton complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return UndirectedSkeleton::from_edges(n, e);
}

UndirectedSkeleton cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return UndirectedSkeleton::from_edges(n, e);
}

TEST(Triangles, SmallGraphs) {
  EXPECT_EQ(list_triangles(complete(4)).size(), 4u);
  EXPECT_EQ(list_triangles(cycle(5)).size(), 0u);
  EXPECT_EQ(list_triangles(complete(5)).size(), 10u);
  for (const auto& t : list_triangles(complete(5))) EXPECT_TRUE(t[0] < t[1] && t[1] < t[2]);
}

TEST(Triangles, MatchesBruteForce) {
  for (int seed = 0; seed < 10; ++seed) {
    const auto s = skeleton(testing::random_digraph(30, 4, 0.2, seed));
    std::size_t brute = 0;
    for (Vertex a = 0; a < 30; ++a)
      for (Vertex b = a + 1; b < 30; ++b)
        for (Vertex c = b + 1; c < 30; ++c) brute += s.has_edge(a, b) && s.has_edge(b, c) && s.has_edge(a, c);
    EXPECT_EQ(list_triangles(s).size(), brute);
  }
}

TEST(VertexVars, BidirectedTriangle) {
  const auto vars = compute_vertex_vars(bidirected_of(3, {{0, 1}, {1, 2}, {0, 2}}));
  for (const auto& v : vars) {
    EXPECT_EQ(v.size(Part::A), 2u);
    EXPECT_EQ(v.bidirected(Part::A, Part::A), 1u);
    std::uint64_t rest = 0;
    for (auto x : v.m) rest += x;
    for (std::size_t i = 1; i < v.m_bi.size(); ++i) rest += v.m_bi[i];
    EXPECT_EQ(rest, 0u);
  }
}

TEST(VertexVars, DirectedCycle) {
  const auto vars = compute_vertex_vars(graph_of(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(vars[0].size(Part::B), 1u);
  EXPECT_EQ(vars[0].size(Part::C), 1u);
  EXPECT_EQ(vars[0].directed(Part::B, Part::C), 1u);
  EXPECT_EQ(vars[0].directed(Part::C, Part::B), 0u);
}

TEST(VertexVars, StarHasNoEdgeCounters) {
  const auto vars = compute_vertex_vars(graph_of(4, {{0, 1}, {1, 0}, {0, 2}, {3, 0}}));
  for (const auto& v : vars) {
    for (auto x : v.m) EXPECT_EQ(x, 0u);
    for (auto x : v.m_bi) EXPECT_EQ(x, 0u);
  }
}

TEST(VertexVars, CountersSumToThreeTimesTriangles) {
  for (int seed = 0; seed < 10; ++seed) {
    const auto g = testing::random_digraph(25, 3, 0.4, 100 + seed);
    std::uint64_t sum = 0;
    for (const auto& v : compute_vertex_vars(g)) {
      for (auto x : v.m) sum += x;
      for (auto x : v.m_bi) sum += x;
    }
    EXPECT_EQ(sum, 3 * list_triangles(skeleton(g)).size());
  }
}

TEST(Count3Directed, StarOfThreeKinds) {
  // Center 0 with a=1 (bidirected), b=2 (0->2), c=3 (3->0).
  const auto h = count3_directed(graph_of(4, {{0, 1}, {1, 0}, {0, 2}, {3, 0}}));
  EXPECT_EQ(h.total(), 3u);
  EXPECT_EQ(h[class3({{0, 1}, {1, 0}, {0, 2}})], 1u);  // a <-> v -> b
  EXPECT_EQ(h[class3({{0, 1}, {1, 0}, {2, 0}})], 1u);  // a <-> v <- c
  EXPECT_EQ(h[class3({{2, 0}, {0, 1}})], 1u);          // c -> v -> b
}

TEST(Count3Directed, StarFrequenciesAreProducts) {
  // Center 0; A = {1,2}, B = {3,4,5}, C = {6}.
  const auto h = count3_directed(
      graph_of(7, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {0, 4}, {0, 5}, {6, 0}}));
  EXPECT_EQ(h[class3({{0, 1}, {1, 0}, {0, 2}})], 2u * 3u);
  EXPECT_EQ(h[class3({{0, 1}, {1, 0}, {2, 0}})], 2u * 1u);
  EXPECT_EQ(h[class3({{2, 0}, {0, 1}})], 3u * 1u);
  EXPECT_EQ(h[class3({{0, 1}, {1, 0}, {0, 2}, {2, 0}})], 1u);  // C(2,2) of A
  EXPECT_EQ(h[class3({{0, 1}, {0, 2}})], 3u);                  // C(3,2) of B
  EXPECT_EQ(h.total(), 6u + 2u + 3u + 1u + 3u);
}

TEST(Count3Directed, BidirectedTriangle) {
  const auto h = count3_directed(bidirected_of(3, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(h.total(), 1u);
  EXPECT_EQ(h[static_cast<ClassId>(class_table(3, true).size() - 1)], 1u);
}

TEST(Count3Directed, TriangleSumsDivisibleByThree) {
  const auto& t = class_table(3, true);
  for (int seed = 0; seed < 10; ++seed) {
    const auto raw = raw_count3_directed(testing::random_digraph(30, 4, 0.3, seed));
    for (std::size_t c = 0; c < raw.size(); ++c) EXPECT_EQ(raw[c] % t.divisor(static_cast<ClassId>(c)), 0u);
  }
}

TEST(Count3Directed, IsolatedVertexDoesNotChangeHistogram) {
  const auto g = testing::random_digraph(20, 3, 0.3, 5);
  auto e = g.edges();
  const auto bigger = DirectedGraph::from_edges(21, e);
  EXPECT_EQ(count3_directed(g), count3_directed(bigger));
}

TEST(Count3Undirected, CycleAndClique) {
  const auto c5 = count3_undirected(cycle(5));
  EXPECT_EQ(c5.counts, (std::vector<std::uint64_t>{5, 0}));
  const auto k4 = count3_undirected(complete(4));
  EXPECT_EQ(k4.counts, (std::vector<std::uint64_t>{0, 4}));
}

TEST(Count3, MatchesOracleOnRandomGraphs) {
  for (int seed = 0; seed < 50; ++seed) {
    const auto g = testing::random_digraph(5 + seed % 36, 1 + seed % 6, (seed % 3) * 0.5, 3000 + seed);
    for (bool directed : {true, false})
      ASSERT_EQ(census(g, 3, directed), oracle_histogram(g, 3, directed).histogram) << "seed " << seed;
  }
}

TEST(Count3, WorkerCountDoesNotChangeResult) {
  const auto g = testing::random_digraph(400, 5, 0.3, 1);
  EXPECT_EQ(census(g, 3, true, {1, {}}), census(g, 3, true, {8, {}}));
}

}  // namespace
}  // namespace motif
