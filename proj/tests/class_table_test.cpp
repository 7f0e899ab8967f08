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

#include <bit>
#include <map>

#include "test_util.hpp"

namespace motif {
namespace {

/// Skeleton shape name of a 4-vertex code, from its sorted degree sequence.
std::string shape4(const AdjacencyCode& c) {
  std::vector<int> deg;
  int edges = 0;
  for (int v = 0; v < 4; ++v) {
    deg.push_back(std::popcount(c.neighbor_mask(v)));
    edges += deg.back();
  }
  std::sort(deg.begin(), deg.end());
  edges /= 2;
  if (edges == 3) return deg[3] == 3 ? "star" : "path";
  if (edges == 4) return deg[3] == 3 ? "tailed_triangle" : "cycle";
  return edges == 5 ? "diamond" : "clique";
}

TEST(ClassTable, CountsPerOrder) {
  EXPECT_EQ(enumerate_classes(3, true).size(), 13u);
  EXPECT_EQ(enumerate_classes(4, true).size(), 199u);
  EXPECT_EQ(enumerate_classes(5, true).size(), 9364u);
  EXPECT_EQ(enumerate_classes(3, false).size(), 2u);
  EXPECT_EQ(enumerate_classes(4, false).size(), 6u);
  EXPECT_EQ(enumerate_classes(5, false).size(), 21u);
  EXPECT_THROW(enumerate_classes(2, true), ConfigError);
  EXPECT_THROW(class_table(6, false), ConfigError);
}

TEST(ClassTable, IdsAreSortedCanonicalRanks) {
  for (int k = 3; k <= 5; ++k)
    for (bool directed : {true, false}) {
      const auto& t = class_table(k, directed);
      for (std::size_t c = 0; c < t.size(); ++c) {
        const auto& rep = t.representative(static_cast<ClassId>(c));
        ASSERT_EQ(canonical_code(rep), rep);
        ASSERT_TRUE(skeleton_connected(rep));
        ASSERT_EQ(t.class_of(rep), static_cast<ClassId>(c));
        ASSERT_EQ(t.find(rep), static_cast<ClassId>(c));
        if (c) {
          ASSERT_LT(t.representative(static_cast<ClassId>(c - 1)), rep);
        }
      }
    }
}

TEST(ClassTable, ClassOfAgreesWithCanonicalCode) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 5000; ++t) {
    const int k = 3 + t % 3;
    const bool directed = t % 4 != 0;
    const auto c = expand_index(k, directed, static_cast<std::uint32_t>(rng() % (1u << compact_bits(k, directed))));
    const auto& table = class_table(k, directed);
    const ClassId id = table.class_of(c);
    if (!skeleton_connected(c)) {
      ASSERT_EQ(id, kNoClass);
      continue;
    }
    ASSERT_EQ(table.representative(id), canonical_code(c));
  }
  EXPECT_THROW(class_table(3, true).class_of(AdjacencyCode{4, true, 0}), ConfigError);
}

TEST(ClassTable, RepeatedEnumerationIsIdentical) {
  const auto a = enumerate_classes(5, true);
  const auto b = enumerate_classes(5, true);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_TRUE(std::equal(a.codes().begin(), a.codes().end(), b.codes().begin()));
  EXPECT_TRUE(std::equal(a.divisors().begin(), a.divisors().end(), b.divisors().begin()));
}

TEST(CorrectionDivisor, UndirectedExamples) {
  EXPECT_EQ(correction_divisor(canonical_code(AdjacencyCode::from_edges(4, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}))),
            4u);
  EXPECT_EQ(correction_divisor(canonical_code(AdjacencyCode::from_edges(4, false, {{0, 1}, {1, 2}, {2, 3}}))), 1u);
  EXPECT_EQ(correction_divisor(
                canonical_code(AdjacencyCode::from_edges(5, false, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}))),
            5u);
}

TEST(CorrectionDivisor, SizeFourDependsOnlyOnSkeleton) {
  const std::map<std::string, std::uint64_t> expected{{"path", 1}, {"tailed_triangle", 3}, {"star", 3},
                                                      {"cycle", 4},  {"diamond", 5},         {"clique", 6}};
  for (bool directed : {true, false}) {
    const auto& t = class_table(4, directed);
    std::map<std::string, int> seen;
    for (std::size_t c = 0; c < t.size(); ++c) {
      const auto shape = shape4(t.representative(static_cast<ClassId>(c)));
      EXPECT_EQ(t.divisor(static_cast<ClassId>(c)), expected.at(shape)) << shape;
      ++seen[shape];
    }
    EXPECT_EQ(seen.size(), 6u);
  }
}

TEST(CorrectionDivisor, SizeThree) {
  for (bool directed : {true, false}) {
    const auto& t = class_table(3, directed);
    for (std::size_t c = 0; c < t.size(); ++c) {
      const auto& rep = t.representative(static_cast<ClassId>(c));
      const bool triangle = rep.adjacent(0, 1) && rep.adjacent(1, 2) && rep.adjacent(0, 2);
      EXPECT_EQ(t.divisor(static_cast<ClassId>(c)), triangle ? 3u : 1u);
    }
  }
}

TEST(CorrectionDivisor, SizeFiveAlwaysPositive) {
  const auto& t = class_table(5, true);
  for (auto d : t.divisors()) ASSERT_GE(d, 1u);
  // Complete skeleton: every one of the 10 triples is a triangle.
  const auto k5 = t.representative(static_cast<ClassId>(t.size() - 1));
  EXPECT_EQ(std::popcount(k5.bits), 20);
  EXPECT_EQ(t.divisor(static_cast<ClassId>(t.size() - 1)), 10u);
}

}  // namespace
}  // namespace motif
