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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "motifcensus/checked.hpp"
#include "motifcensus/class_table.hpp"
#include "motifcensus/graph.hpp"
#include "motifcensus/histogram.hpp"
#include "motifcensus/parallel.hpp"
#include "motifcensus/pattern_lookup.hpp"
#include "motifcensus/set_counters.hpp"
#include "motifcensus/triangles.hpp"

namespace motif {

/// Per-vertex neighborhood statistics: partition sizes plus the number of
/// edges joining two neighbors, split by the neighbors' parts.
struct VertexVars {
  std::array<std::uint64_t, 3> n{};
  /// m[from*3+to]: single-direction edges x->y, x in part `from`, y in `to`.
  std::array<std::uint64_t, 9> m{};
  /// m' for the pairs aa, ab, ac, bb, bc, cc.
  std::array<std::uint64_t, 6> m_bi{};

  static constexpr std::size_t bi_slot(Part a, Part b) {
    auto i = static_cast<std::size_t>(a), j = static_cast<std::size_t>(b);
    if (i > j) std::swap(i, j);
    return i == 0 ? j : (i == 1 ? 2 + j : 5);
  }

  std::uint64_t size(Part p) const { return n[static_cast<std::size_t>(p)]; }
  std::uint64_t directed(Part from, Part to) const {
    return m[static_cast<std::size_t>(from) * 3 + static_cast<std::size_t>(to)];
  }
  std::uint64_t bidirected(Part a, Part b) const { return m_bi[bi_slot(a, b)]; }
};

/// Part of x relative to v; x must be a neighbor of v.
inline Part part_of(const DirectedGraph& g, Vertex v, Vertex x) {
  const bool out = g.has_edge(v, x);
  const bool in = g.has_edge(x, v);
  return out && in ? Part::A : (out ? Part::B : Part::C);
}

/// Fills VertexVars from the triangle list: each triangle, seen from each
/// of its three corners, adds one edge between two neighbors.
inline std::vector<VertexVars> compute_vertex_vars(const DirectedGraph& g, const UndirectedSkeleton& s) {
  std::vector<VertexVars> vars(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    vars[v].n = {g.bi_nbrs(v).size(), g.out_nbrs(v).size(), g.in_nbrs(v).size()};
  }
  auto corner = [&](Vertex v, Vertex x, Vertex y) {
    const Part px = part_of(g, v, x);
    const Part py = part_of(g, v, y);
    const bool xy = g.has_edge(x, y), yx = g.has_edge(y, x);
    auto& vv = vars[v];
    if (xy && yx)
      ++vv.m_bi[VertexVars::bi_slot(px, py)];
    else if (xy)
      ++vv.m[static_cast<std::size_t>(px) * 3 + static_cast<std::size_t>(py)];
    else
      ++vv.m[static_cast<std::size_t>(py) * 3 + static_cast<std::size_t>(px)];
  };
  for_each_triangle(s, [&](Vertex a, Vertex b, Vertex c) {
    corner(a, b, c);
    corner(b, a, c);
    corner(c, a, b);
  });
  return vars;
}

inline std::vector<VertexVars> compute_vertex_vars(const DirectedGraph& g) {
  return compute_vertex_vars(g, skeleton(g));
}

/// Pre-correction size-3 sums: every vertex adds its vertex-pattern
/// frequencies; a triangle-shaped occurrence is seen from all 3 corners.
inline std::vector<std::uint64_t> raw_count3_directed(const DirectedGraph& g, const CensusOptions& opts = {}) {
  const auto& table = class_table(3, true);
  const auto& lk = pattern_lookup_3();
  const auto vars = compute_vertex_vars(g);
  std::vector<std::uint64_t> raw(table.size(), 0);

  struct Worker {
    SetPairCounters<PatternLookup3> counters;
    std::vector<std::uint64_t> raw;
  };
  parallel_jobs(
      vars.size(), opts.workers, [&] { return Worker{{}, std::vector<std::uint64_t>(table.size(), 0)}; },
      [&](Worker& w, std::size_t v) {
        const auto& vv = vars[v];
        constexpr std::array<Part, 3> parts{Part::A, Part::B, Part::C};
        for (Part p : parts) w.counters.add_member(static_cast<int>(p), vv.size(p));
        for (Part p : parts)
          for (Part q : parts) {
            w.counters.add_directed(static_cast<int>(p), static_cast<int>(q), vv.directed(p, q));
            if (p <= q) w.counters.add_bidirected(static_cast<int>(p), static_cast<int>(q), vv.bidirected(p, q));
          }
        w.counters.accumulate(lk, 0, w.raw);
        w.counters.clear();
      },
      [&](Worker& w) { merge_counts(raw, w.raw); }, 256);
  return raw;
}

inline MotifHistogram count3_directed(const DirectedGraph& g, const CensusOptions& opts = {}) {
  return finalize(class_table(3, true), raw_count3_directed(g, opts), opts.divisor_override);
}

/// Pre-correction undirected size-3 sums: neighbor pairs of each vertex,
/// split into closed (K3, seen 3 times) and open (P3, seen once).
inline std::vector<std::uint64_t> raw_count3_undirected(const UndirectedSkeleton& s) {
  const auto& table = class_table(3, false);
  static const ClassId p3 = table.class_of(AdjacencyCode::from_edges(3, false, {{0, 1}, {1, 2}}));
  static const ClassId k3 = table.class_of(AdjacencyCode::from_edges(3, false, {{0, 1}, {1, 2}, {0, 2}}));
  std::uint64_t triangles = 0;
  for_each_triangle(s, [&](Vertex, Vertex, Vertex) { ++triangles; });
  u128 wedges = 0;
  for (Vertex v = 0; v < s.num_vertices(); ++v) wedges += choose2(s.degree(v));
  const u128 closed = static_cast<u128>(triangles) * 3;
  std::vector<std::uint64_t> raw(table.size(), 0);
  raw[static_cast<std::size_t>(p3)] = checked_narrow(nonnegative_sub(wedges, closed, "open wedges"));
  raw[static_cast<std::size_t>(k3)] = checked_narrow(closed);
  return raw;
}

inline MotifHistogram count3_undirected(const UndirectedSkeleton& s, const CensusOptions& opts = {}) {
  return finalize(class_table(3, false), raw_count3_undirected(s), opts.divisor_override);
}

}  // namespace motif
