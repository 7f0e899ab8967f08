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

/// A connected induced triple. Open triples (P3) are stored as
/// (end, center, end) with p[0] < p[2]; triangles as p[0] < p[1] < p[2].
struct TripleJob {
  std::array<Vertex, 3> p{};
  bool triangle = false;

  friend bool operator==(const TripleJob&, const TripleJob&) = default;
};

/// Triples owned by `center`: every open triple through it, and every
/// triangle whose smallest vertex it is.
template <class Fn>
void for_each_triple_at(const UndirectedSkeleton& s, Vertex center, Fn&& fn) {
  const auto nb = s.neighbors(center);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      const Vertex a = nb[i], b = nb[j];
      if (s.has_edge(a, b)) {
        if (center < a) fn(TripleJob{{center, a, b}, true});
      } else {
        fn(TripleJob{{a, center, b}, false});
      }
    }
}

inline std::vector<TripleJob> list_triples(const UndirectedSkeleton& s) {
  std::vector<TripleJob> out;
  for (Vertex c = 0; c < s.num_vertices(); ++c) for_each_triple_at(s, c, [&](const TripleJob& t) { out.push_back(t); });
  return out;
}

/// Labeled 3-vertex code of the triple in its stored order.
inline AdjacencyCode triple_code(const DirectedGraph& g, const TripleJob& t) {
  AdjacencyCode c{3, true, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && g.has_edge(t.p[static_cast<std::size_t>(i)], t.p[static_cast<std::size_t>(j)])) c.set(i, j);
  return c;
}

inline AdjacencyCode triple_code(const UndirectedSkeleton& s, const TripleJob& t) {
  AdjacencyCode c{3, false, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (s.has_edge(t.p[static_cast<std::size_t>(i)], t.p[static_cast<std::size_t>(j)])) c.set(i, j);
  return c;
}

struct TripleClass {
  ClassId delta = kNoClass;
  /// The triple reordered so its labeled code equals the class representative.
  std::array<Vertex, 3> ordered{};
};

inline TripleClass classify_triple_directed(const DirectedGraph& g, const TripleJob& t) {
  const auto al = align_triple(triple_code(g, t), class_table(3, true));
  return {al.base, {t.p[al.order[0]], t.p[al.order[1]], t.p[al.order[2]]}};
}

// ---------------------------------------------------------------------------
// Undirected

/// Names of the seven undirected triple sets, by set index: bit p of
/// (index + 1) means "adjacent to p_{p+1}".
inline const std::array<std::string, 7>& triple_set_names() {
  static const std::array<std::string, 7> names{"X1", "X2", "Y12", "X3", "Y13", "Y23", "Z"};
  return names;
}

struct TripleSetsUndirected {
  static constexpr int kSets = PatternLookup5U::kSets;
  std::array<std::vector<Vertex>, kSets> sets;
  std::array<std::uint64_t, kSets> size{};
  /// m[i][j] = m[j][i]: edges between (or, for i == j, inside) the sets.
  std::array<std::array<std::uint64_t, kSets>, kSets> m{};

  const std::vector<Vertex>& named(const std::string& name) const {
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (triple_set_names()[i] == name) return sets[i];
    throw ConfigError("unknown triple set " + name);
  }
};

inline TripleSetsUndirected triple_sets_undirected(const UndirectedSkeleton& s, const TripleJob& t) {
  AnchorPartitioner<PatternLookup5U> part(s.num_vertices());
  SetPairCounters<PatternLookup5U> counters;
  part.run(s, t.p, counters);
  TripleSetsUndirected out;
  for (auto [x, set] : part.last_members()) out.sets[static_cast<std::size_t>(set)].push_back(x);
  for (auto& v : out.sets) std::sort(v.begin(), v.end());
  for (int i = 0; i < TripleSetsUndirected::kSets; ++i) {
    out.size[static_cast<std::size_t>(i)] = counters.size(i);
    for (int j = 0; j < TripleSetsUndirected::kSets; ++j)
      out.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = counters.bidirected(i, j);
  }
  return out;
}

namespace detail {

/// Shared driver: one job per center vertex, each triple aligned to its
/// base representative, partitioned, counted and accumulated.
template <class Lookup, class Graph>
std::vector<std::uint64_t> raw_count5(const Graph& g, const UndirectedSkeleton& s, const Lookup& lk,
                                      const ClassTable& table, const CensusOptions& opts) {
  const auto& aligner = triple_aligner(Lookup::kDirected);
  std::vector<std::uint64_t> raw(table.size(), 0);
  struct Worker {
    AnchorPartitioner<Lookup> part;
    SetPairCounters<Lookup> counters;
    std::vector<std::uint64_t> raw;
  };
  parallel_jobs(
      s.num_vertices(), opts.workers,
      [&] { return Worker{AnchorPartitioner<Lookup>(s.num_vertices()), {}, std::vector<std::uint64_t>(table.size(), 0)}; },
      [&](Worker& w, std::size_t c) {
        for_each_triple_at(s, static_cast<Vertex>(c), [&](const TripleJob& t) {
          const auto& al = aligner(triple_code(g, t).bits);
          w.part.run(g, {t.p[al.order[0]], t.p[al.order[1]], t.p[al.order[2]]}, w.counters);
          w.counters.accumulate(lk, al.base, w.raw);
          w.counters.clear();
        });
      },
      [&](Worker& w) { merge_counts(raw, w.raw); }, 4);
  return raw;
}

}  // namespace detail

inline std::vector<std::uint64_t> raw_count5_undirected(const UndirectedSkeleton& s, const CensusOptions& opts = {}) {
  return detail::raw_count5(s, s, pattern_lookup_5u(), class_table(5, false), opts);
}

inline MotifHistogram count5_undirected(const UndirectedSkeleton& s, const CensusOptions& opts = {}) {
  return finalize(class_table(5, false), raw_count5_undirected(s, opts), opts.divisor_override);
}

// ---------------------------------------------------------------------------
// Directed

/// Name of a 63-way triple set, e.g. "set(A,B,-)".
inline std::string triple_set_name_directed(int set) {
  static constexpr char letter[] = {'-', 'A', 'B', 'C'};
  std::string s = "set(";
  for (int p = 0; p < 3; ++p) {
    if (p) s += ',';
    s += letter[PatternLookup5::relation(set, p)];
  }
  return s + ')';
}

struct TripleSetsDirected {
  static constexpr int kSets = PatternLookup5::kSets;
  std::array<std::vector<Vertex>, kSets> sets;
  std::array<std::uint64_t, kSets> size{};
  std::array<std::array<std::uint64_t, kSets>, kSets> m{};
  std::array<std::array<std::uint64_t, kSets>, kSets> m_bi{};
};

/// Sets relative to the triple in its stored order (no alignment).
inline TripleSetsDirected triple_sets_directed(const DirectedGraph& g, const TripleJob& t) {
  AnchorPartitioner<PatternLookup5> part(g.num_vertices());
  SetPairCounters<PatternLookup5> counters;
  part.run(g, t.p, counters);
  TripleSetsDirected out;
  for (auto [x, set] : part.last_members()) out.sets[static_cast<std::size_t>(set)].push_back(x);
  for (auto& v : out.sets) std::sort(v.begin(), v.end());
  for (int i = 0; i < TripleSetsDirected::kSets; ++i) {
    out.size[static_cast<std::size_t>(i)] = counters.size(i);
    for (int j = 0; j < TripleSetsDirected::kSets; ++j) {
      out.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = counters.directed(i, j);
      out.m_bi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = counters.bidirected(i, j);
    }
  }
  return out;
}

inline std::vector<std::uint64_t> raw_count5_directed(const DirectedGraph& g, const CensusOptions& opts = {}) {
  return detail::raw_count5(g, skeleton(g), pattern_lookup_5(), class_table(5, true), opts);
}

inline MotifHistogram count5_directed(const DirectedGraph& g, const CensusOptions& opts = {}) {
  return finalize(class_table(5, true), raw_count5_directed(g, opts), opts.divisor_override);
}

}  // namespace motif
