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

#pragma once

#include <cstdint>
#include <vector>

#include "motifcensus/adjacency_code.hpp"
#include "motifcensus/class_table.hpp"
#include "motifcensus/graph.hpp"
#include "motifcensus/histogram.hpp"
#include "motifcensus/motif3.hpp"
#include "motifcensus/motif4.hpp"
#include "motifcensus/motif5.hpp"

namespace motif {

inline void check_order(int k) {
  if (k < kMinOrder || k > kMaxOrder) throw ConfigError("k must be 3, 4 or 5, got " + std::to_string(k));
}

/// Pre-correction sums for order k. Undirected mode counts the skeleton.
inline std::vector<std::uint64_t> raw_census(const DirectedGraph& g, int k, bool directed,
                                             const CensusOptions& opts = {}) {
  check_order(k);
  if (directed) {
    switch (k) {
      case 3: return raw_count3_directed(g, opts);
      case 4: return raw_count4_directed(g, opts);
      default: return raw_count5_directed(g, opts);
    }
  }
  const auto s = skeleton(g);
  switch (k) {
    case 3: return raw_count3_undirected(s);
    case 4: return raw_count4_undirected(s, opts);
    default: return raw_count5_undirected(s, opts);
  }
}

/// Connected induced k-subgraphs of g grouped by isomorphism class.
inline MotifHistogram census(const DirectedGraph& g, int k, bool directed, const CensusOptions& opts = {}) {
  return finalize(class_table(k, directed), raw_census(g, k, directed, opts), opts.divisor_override);
}

/// A k-vertex graph with the code's edges; undirected codes become
/// bidirected pairs.
inline DirectedGraph graph_from_code(const AdjacencyCode& c) {
  std::vector<Edge> e;
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.k; ++j)
      if (c.bit(i, j)) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return DirectedGraph::from_edges(c.k, e);
}

}  // namespace motif
