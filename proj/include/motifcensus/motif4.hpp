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
#include <string>
#include <vector>

#include "motifcensus/checked.hpp"
#include "motifcensus/class_table.hpp"
#include "motifcensus/graph.hpp"
#include "motifcensus/histogram.hpp"
#include "motifcensus/parallel.hpp"
#include "motifcensus/pattern_lookup.hpp"
#include "motifcensus/set_counters.hpp"

namespace motif {

// ---------------------------------------------------------------------------
// Undirected

/// Neighborhood of a skeleton edge {u,v}: X only next to u, Y only next to
/// v, Z next to both, plus edge counts inside and between them.
struct EdgeSetsUndirected {
  std::vector<Vertex> x, y, z;
  std::uint64_t n_x = 0, n_y = 0, n_z = 0;
  std::uint64_t m_xx = 0, m_xy = 0, m_xz = 0, m_yy = 0, m_yz = 0, m_zz = 0;
};

/// Reusable scratch for edge_sets_undirected; one per worker.
class EdgeSetBuilder {
 public:
  explicit EdgeSetBuilder(std::size_t n) : label_(n, 0) {}

  void build(const UndirectedSkeleton& s, Vertex u, Vertex v, EdgeSetsUndirected& out) {
    out = EdgeSetsUndirected{};
    members_.clear();
    auto mark = [&](Vertex x, std::uint8_t bit) {
      if (x == u || x == v) return;
      if (!label_[x]) members_.push_back(x);
      label_[x] |= bit;
    };
    for (Vertex x : s.neighbors(u)) mark(x, 1);
    for (Vertex x : s.neighbors(v)) mark(x, 2);

    std::array<std::array<std::uint64_t, 4>, 4> m{};
    for (Vertex x : members_) {
      switch (label_[x]) {
        case 1: out.x.push_back(x); break;
        case 2: out.y.push_back(x); break;
        default: out.z.push_back(x); break;
      }
      for (Vertex w : s.neighbors(x))
        if (w > x && label_[w]) {
          auto a = label_[x], b = label_[w];
          if (a > b) std::swap(a, b);
          ++m[a][b];
        }
    }
    for (Vertex x : members_) label_[x] = 0;
    out.n_x = out.x.size();
    out.n_y = out.y.size();
    out.n_z = out.z.size();
    out.m_xx = m[1][1];
    out.m_xy = m[1][2];
    out.m_xz = m[1][3];
    out.m_yy = m[2][2];
    out.m_yz = m[2][3];
    out.m_zz = m[3][3];
  }

 private:
  std::vector<std::uint8_t> label_;
  std::vector<Vertex> members_;
};

inline EdgeSetsUndirected edge_sets_undirected(const UndirectedSkeleton& s, Vertex u, Vertex v) {
  EdgeSetBuilder b(s.num_vertices());
  EdgeSetsUndirected out;
  b.build(s, u, v, out);
  return out;
}

/// Class ids of the six connected 4-vertex undirected shapes.
struct Shapes4 {
  ClassId path, tailed_triangle, star, diamond, cycle, clique;

  static const Shapes4& get() {
    static const Shapes4 shapes = [] {
      const auto& t = class_table(4, false);
      auto id = [&](std::initializer_list<std::pair<int, int>> e) {
        return t.class_of(AdjacencyCode::from_edges(4, false, e));
      };
      return Shapes4{id({{0, 1}, {1, 2}, {2, 3}}),
                     id({{0, 1}, {1, 2}, {0, 2}, {0, 3}}),
                     id({{0, 1}, {0, 2}, {0, 3}}),
                     id({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
                     id({{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                     id({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
    }();
    return shapes;
  }
};

/// Pre-correction undirected size-4 sums from the per-edge closed forms.
inline std::vector<std::uint64_t> raw_count4_undirected(const UndirectedSkeleton& s, const CensusOptions& opts = {}) {
  const auto& table = class_table(4, false);
  const auto& shape = Shapes4::get();
  const auto edges = s.edges();
  std::vector<std::uint64_t> raw(table.size(), 0);

  struct Worker {
    EdgeSetBuilder builder;
    EdgeSetsUndirected sets;
    std::array<u128, 6> sum{};
  };
  parallel_jobs(
      edges.size(), opts.workers, [&] { return Worker{EdgeSetBuilder(s.num_vertices()), {}, {}}; },
      [&](Worker& w, std::size_t e) {
        w.builder.build(s, edges[e].first, edges[e].second, w.sets);
        const auto& q = w.sets;
        const u128 nx = q.n_x, ny = q.n_y, nz = q.n_z;
        auto c2 = [](u128 n) { return n * (n - 1) / 2; };
        // P4, tailed triangle, S3, K4 minus an edge, C4, K4.
        w.sum[0] += nonnegative_sub(nx * ny, q.m_xy, "P4");
        w.sum[1] += nonnegative_sub((nx + ny) * nz + q.m_xx + q.m_yy, static_cast<u128>(q.m_xz) + q.m_yz, "tailed triangle");
        w.sum[2] += nonnegative_sub(c2(nx) + c2(ny), static_cast<u128>(q.m_xx) + q.m_yy, "S3");
        w.sum[3] += nonnegative_sub(c2(nz) + q.m_xz + q.m_yz, q.m_zz, "diamond");
        w.sum[4] += q.m_xy;
        w.sum[5] += q.m_zz;
      },
      [&](Worker& w) {
        const std::array<ClassId, 6> ids{shape.path, shape.tailed_triangle, shape.star,
                                         shape.diamond, shape.cycle, shape.clique};
        for (std::size_t i = 0; i < ids.size(); ++i) {
          auto& slot = raw[static_cast<std::size_t>(ids[i])];
          slot = checked_add(slot, checked_narrow(w.sum[i]));
        }
      },
      64);
  return raw;
}

inline MotifHistogram count4_undirected(const UndirectedSkeleton& s, const CensusOptions& opts = {}) {
  return finalize(class_table(4, false), raw_count4_undirected(s, opts), opts.divisor_override);
}

// ---------------------------------------------------------------------------
// Directed

/// Name of a 15-way edge neighbor set: "A1".."C1" touch only u, "A2".."C2"
/// only v, two letters give the relation to u then to v.
inline std::string edge_set_name(int set) {
  static constexpr char letter[] = {'-', 'A', 'B', 'C'};
  const auto ru = PatternLookup4::relation(set, 0);
  const auto rv = PatternLookup4::relation(set, 1);
  if (rv == kNone) return std::string{letter[ru], '1'};
  if (ru == kNone) return std::string{letter[rv], '2'};
  return std::string{letter[ru], letter[rv]};
}

inline int edge_set_index(const std::string& name) {
  for (int i = 0; i < PatternLookup4::kSets; ++i)
    if (edge_set_name(i) == name) return i;
  throw ConfigError("unknown edge set name " + name);
}

/// The 15 neighbor sets of e = (u,v) with their sizes and the directed and
/// bidirected edge counts between every pair of sets.
struct EdgeSetsDirected {
  static constexpr int kSets = PatternLookup4::kSets;
  std::array<std::vector<Vertex>, kSets> sets;
  std::array<std::uint64_t, kSets> size{};
  /// m[i][j]: single-direction edges from set i into set j.
  std::array<std::array<std::uint64_t, kSets>, kSets> m{};
  /// m'[i][j] = m'[j][i]: bidirected pairs between sets i and j.
  std::array<std::array<std::uint64_t, kSets>, kSets> m_bi{};
};

inline EdgeSetsDirected edge_sets_directed(const DirectedGraph& g, Vertex u, Vertex v) {
  AnchorPartitioner<PatternLookup4> part(g.num_vertices());
  SetPairCounters<PatternLookup4> counters;
  part.run(g, {u, v}, counters);
  EdgeSetsDirected out;
  for (auto [x, set] : part.last_members()) out.sets[static_cast<std::size_t>(set)].push_back(x);
  for (auto& s : out.sets) std::sort(s.begin(), s.end());
  for (int i = 0; i < EdgeSetsDirected::kSets; ++i) {
    out.size[static_cast<std::size_t>(i)] = counters.size(i);
    for (int j = 0; j < EdgeSetsDirected::kSets; ++j) {
      out.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = counters.directed(i, j);
      out.m_bi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = counters.bidirected(i, j);
    }
  }
  return out;
}

/// Pre-correction directed size-4 sums. Each adjacent pair is one job: a
/// bidirected pair uses the bidirected base, a single edge is oriented so
/// the anchor reads u->v and uses the directed base.
inline std::vector<std::uint64_t> raw_count4_directed(const DirectedGraph& g, const CensusOptions& opts = {}) {
  const auto& table = class_table(4, true);
  const auto& lk = pattern_lookup_4();
  const auto edges = skeleton(g).edges();
  std::vector<std::uint64_t> raw(table.size(), 0);

  struct Worker {
    AnchorPartitioner<PatternLookup4> part;
    SetPairCounters<PatternLookup4> counters;
    std::vector<std::uint64_t> raw;
  };
  parallel_jobs(
      edges.size(), opts.workers,
      [&] { return Worker{AnchorPartitioner<PatternLookup4>(g.num_vertices()), {}, std::vector<std::uint64_t>(table.size(), 0)}; },
      [&](Worker& w, std::size_t e) {
        auto [u, v] = edges[e];
        const bool uv = g.has_edge(u, v), vu = g.has_edge(v, u);
        int base = kBaseDirected;
        if (uv && vu)
          base = kBaseBidirected;
        else if (vu)
          std::swap(u, v);
        w.part.run(g, {u, v}, w.counters);
        w.counters.accumulate(lk, base, w.raw);
        w.counters.clear();
      },
      [&](Worker& w) { merge_counts(raw, w.raw); }, 64);
  return raw;
}

inline MotifHistogram count4_directed(const DirectedGraph& g, const CensusOptions& opts = {}) {
  return finalize(class_table(4, true), raw_count4_directed(g, opts), opts.divisor_override);
}

}  // namespace motif
