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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>

#include "test_util.hpp"

namespace motif {
namespace {

using Triple = std::array<std::size_t, 3>;

std::vector<Triple> degree_triples(const DirectedGraph& g) {
  std::vector<Triple> t;
  for (Vertex v = 0; v < g.num_vertices(); ++v) t.push_back({g.bi_nbrs(v).size(), g.out_nbrs(v).size(), g.in_nbrs(v).size()});
  return t;
}

TEST(Randomize, PreservesDegreeTriples) {
  for (int seed = 0; seed < 20; ++seed) {
    const auto g = testing::random_digraph(30 + seed, 1 + seed % 5, (seed % 3) * 0.4, 1100 + seed);
    const auto r = randomize(g, {3, static_cast<std::uint64_t>(seed), 0});
    EXPECT_EQ(r.num_vertices(), g.num_vertices());
    EXPECT_EQ(r.num_edges(), g.num_edges());
    EXPECT_EQ(r.num_bidirected_pairs(), g.num_bidirected_pairs());
    EXPECT_EQ(degree_triples(r), degree_triples(g));
    EXPECT_EQ(r.labels(), g.labels());
  }
}

TEST(Randomize, ActuallyRewires) {
  const auto g = testing::random_digraph(100, 3, 0.2, 3);
  EXPECT_NE(randomize(g, {3, 1, 0}).edges(), g.edges());
}

TEST(Randomize, SameSeedSameGraph) {
  const auto g = testing::random_digraph(50, 3, 0.3, 4);
  EXPECT_EQ(randomize(g, {3, 99, 0}).edges(), randomize(g, {3, 99, 0}).edges());
  EXPECT_NE(randomize(g, {3, 99, 0}).edges(), randomize(g, {3, 100, 0}).edges());
}

TEST(Randomize, ZeroAttemptsIsIdentity) {
  const auto g = testing::random_digraph(50, 3, 0.3, 5);
  EXPECT_EQ(randomize(g, {0, 1, 0}).edges(), g.edges());
}

TEST(Randomize, DirectedThreeCycleHasNoValidSwitch) {
  // Every pair of cycle edges either shares a vertex or would close an
  // existing adjacency, so any seed must return the input unchanged.
  const auto g = testing::graph_of(3, {{0, 1}, {1, 2}, {2, 0}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_EQ(randomize(g, {10, seed, 0}).edges(), g.edges());
  // Exhaustive: every ordered pair of distinct edges is rejected.
  const auto e = g.edges();
  for (auto [a, b] : e)
    for (auto [c, d] : e) {
      if (a == c && b == d) continue;
      const bool loop = a == d || c == b;
      const bool clash = g.adjacent(a, d) || g.adjacent(c, b);
      EXPECT_TRUE(loop || clash);
    }
}

TEST(Randomize, FewEdgesOfAKindSkipTrials) {
  const auto g = testing::graph_of(4, {{0, 1}, {2, 3}, {3, 2}});
  const auto r = randomize(g, {5, 1, 0});
  EXPECT_EQ(r.edges(), g.edges());
}

TEST(UniformIndex, StaysInRange) {
  std::mt19937_64 rng(1);
  std::array<int, 7> hits{};
  for (int i = 0; i < 7000; ++i) {
    const auto x = uniform_index(rng, 7);
    ASSERT_LT(x, 7u);
    ++hits[x];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Significance, CopiesOfTheGraphGiveZeroScores) {
  const auto g = testing::random_digraph(40, 3, 0.3, 6);
  const auto st = significance(g, 3, true, {0, 1, 5});
  ASSERT_FALSE(st.rows.empty());
  for (const auto& r : st.rows) {
    EXPECT_EQ(r.stddev, 0.0);
    EXPECT_EQ(r.z, 0.0);
    EXPECT_EQ(r.mean, static_cast<double>(r.real));
    EXPECT_EQ(r.p, 1.0);
  }
}

TEST(Significance, RealColumnEqualsCensus) {
  const auto g = testing::random_digraph(60, 3, 0.3, 7);
  for (int k = 3; k <= 4; ++k) {
    const auto st = significance(g, k, true, {3, 5, 4});
    EXPECT_EQ(st.real, census(g, k, true));
    for (const auto& r : st.rows) EXPECT_EQ(r.real, st.real[r.id]);
  }
}

TEST(Significance, OmitsClassesAbsentEverywhere) {
  const auto g = testing::graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto st = significance(g, 3, true, {3, 1, 3});
  for (const auto& r : st.rows) EXPECT_TRUE(r.real > 0 || r.mean > 0);
  EXPECT_LT(st.rows.size(), class_table(3, true).size());
}

TEST(Significance, DeterministicAcrossRunsAndWorkers) {
  const auto g = testing::random_digraph(80, 3, 0.3, 8);
  auto a = significance(g, 3, true, {3, 42, 12}, 1);
  auto b = significance(g, 3, true, {3, 42, 12}, 1);
  auto c = significance(g, 3, true, {3, 42, 12}, 8);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  ASSERT_EQ(a.rows.size(), c.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].mean, b.rows[i].mean);
    EXPECT_EQ(a.rows[i].mean, c.rows[i].mean);
    EXPECT_EQ(a.rows[i].stddev, c.rows[i].stddev);
    EXPECT_EQ(a.rows[i].p, c.rows[i].p);
  }
}

TEST(Significance, EnsembleSizeAndDefaults) {
  const auto g = testing::random_digraph(20, 2, 0.3, 9);
  EXPECT_THROW(significance(g, 3, true, {3, 1, 1}), ConfigError);
  EXPECT_THROW(significance(g, 6, true, {3, 1, 5}), ConfigError);
  EXPECT_EQ(default_ensemble_size(3), 100u);
  EXPECT_EQ(default_ensemble_size(4), 10u);
  EXPECT_EQ(default_ensemble_size(5), 5u);
  EXPECT_EQ(significance(g, 4, true, {3, 1, 0}).ensemble_size, 10u);
}

TEST(ZScore, Conventions) {
  EXPECT_EQ(z_score(5, 3, 2), 1.0);
  EXPECT_EQ(z_score(3, 3, 0), 0.0);
  EXPECT_TRUE(std::isinf(z_score(4, 3, 0)));
  EXPECT_GT(z_score(4, 3, 0), 0.0);
  EXPECT_LT(z_score(2, 3, 0), 0.0);
  ClassStats cs;
  cs.z = z_score(2, 3, 0);
  EXPECT_TRUE(cs.z_infinite());
}

TEST(Significance, ConstantEnsembleEqualToRealScoresZero) {
  // A bidirected triangle has no valid switch; the ensemble equals the
  // input, so z is 0 rather than infinite.
  const auto g = testing::bidirected_of(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto st = significance(g, 3, true, {3, 1, 4});
  ASSERT_EQ(st.rows.size(), 1u);
  EXPECT_FALSE(st.rows[0].z_infinite());
  EXPECT_EQ(st.rows[0].z, 0.0);
}

TEST(Significance, UndirectedModeRandomizesSkeleton) {
  const auto g = testing::random_digraph(60, 3, 0.3, 10);
  const auto st = significance(g, 3, false, {3, 2, 5});
  EXPECT_EQ(st.real, census(g, 3, false));
  EXPECT_FALSE(st.directed);
}

TEST(Significance, FeedForwardLoopIsEnrichedInTranscriptionScaleGraph) {
  const char* dir = std::getenv("MOTIF_DATA_DIR");
  ASSERT_NE(dir, nullptr);
  std::ifstream in(std::string(dir) + "/ecoli_scale.txt");
  ASSERT_TRUE(in);
  const auto g = load_edge_list(in).graph;
  const auto st = significance(g, 3, true, {3, 2009, 100});
  const auto ffl = class_table(3, true).class_of(AdjacencyCode::from_edges(3, true, {{0, 1}, {0, 2}, {1, 2}}));
  bool found = false;
  for (const auto& r : st.rows)
    if (r.id == ffl) {
      found = true;
      EXPECT_GT(r.z, 0.0);
    }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace motif
