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

#include <atomic>
#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "motifcensus/census.hpp"
#include "motifcensus/class_table.hpp"
#include "motifcensus/graph.hpp"
#include "motifcensus/histogram.hpp"
#include "motifcensus/parallel.hpp"

namespace motif {

namespace detail {

template <class Fn>
void esu_extend(const UndirectedSkeleton& s, int k, Vertex root, std::vector<Vertex>& sub, std::vector<Vertex> ext,
                Fn& fn) {
  if (static_cast<int>(sub.size()) == k) {
    fn(std::span<const Vertex>(sub));
    return;
  }
  while (!ext.empty()) {
    const Vertex w = ext.back();
    ext.pop_back();
    std::vector<Vertex> next = ext;
    for (Vertex u : s.neighbors(w)) {
      if (u <= root) continue;
      bool exclusive = true;
      for (Vertex x : sub)
        if (u == x || s.has_edge(u, x)) {
          exclusive = false;
          break;
        }
      if (exclusive) next.push_back(u);
    }
    sub.push_back(w);
    esu_extend(s, k, root, sub, std::move(next), fn);
    sub.pop_back();
  }
}

}  // namespace detail

/// Calls fn(vertices) once for each k-subset rooted at `root` (its smallest
/// vertex) whose induced skeleton is connected. ESU-style: a subset only
/// grows by larger-than-root vertices that are exclusive neighbors of the
/// vertex just added, so no subset is produced twice.
template <class Fn>
void enumerate_connected_induced_from(const UndirectedSkeleton& s, int k, Vertex root, Fn&& fn) {
  std::vector<Vertex> sub{root};
  std::vector<Vertex> ext;
  for (Vertex u : s.neighbors(root))
    if (u > root) ext.push_back(u);
  detail::esu_extend(s, k, root, sub, std::move(ext), fn);
}

template <class Fn>
void enumerate_connected_induced(const UndirectedSkeleton& s, int k, Fn&& fn) {
  check_order(k);
  for (Vertex v = 0; v < s.num_vertices(); ++v) enumerate_connected_induced_from(s, k, v, fn);
}

struct OracleOptions {
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;
};

struct OracleReport {
  int k = 0;
  bool directed = true;
  MotifHistogram histogram;
  std::uint64_t total = 0;
  double seconds = 0;
};

/// Brute-force census: enumerate, canonicalize, tally. Throws
/// BudgetExceeded once more than `budget` subsets have been seen.
inline OracleReport oracle_histogram(const DirectedGraph& g, int k, bool directed, const OracleOptions& opts = {}) {
  check_order(k);
  const auto start = std::chrono::steady_clock::now();
  const auto& table = class_table(k, directed);
  const auto s = skeleton(g);
  std::atomic<std::uint64_t> seen{0};

  OracleReport rep;
  rep.k = k;
  rep.directed = directed;
  rep.histogram = MotifHistogram{k, directed, std::vector<std::uint64_t>(table.size(), 0)};

  parallel_jobs(
      s.num_vertices(), opts.workers, [&] { return std::vector<std::uint64_t>(table.size(), 0); },
      [&](std::vector<std::uint64_t>& hist, std::size_t root) {
        std::uint64_t local = 0;
        enumerate_connected_induced_from(s, k, static_cast<Vertex>(root), [&](std::span<const Vertex> set) {
          if ((++local & 0x3ff) == 0 && seen.fetch_add(0x400) + 0x400 > opts.budget)
            throw BudgetExceeded("oracle budget of " + std::to_string(opts.budget) + " subgraphs exceeded");
          AdjacencyCode c{static_cast<std::uint8_t>(k), directed, 0};
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
              if (i == j) continue;
              const Vertex a = set[static_cast<std::size_t>(i)], b = set[static_cast<std::size_t>(j)];
              if (directed ? g.has_edge(a, b) : s.has_edge(a, b)) c.bits |= 1u << AdjacencyCode::pos(k, i, j);
            }
          const ClassId id = table.class_of(c);
          if (id == kNoClass) throw InternalError("enumerated subset is disconnected");
          ++hist[static_cast<std::size_t>(id)];
        });
        if (seen.fetch_add(local & 0x3ff) + (local & 0x3ff) > opts.budget)
          throw BudgetExceeded("oracle budget of " + std::to_string(opts.budget) + " subgraphs exceeded");
      },
      [&](std::vector<std::uint64_t>& hist) { merge_counts(rep.histogram.counts, hist); }, 1);

  rep.total = rep.histogram.total();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Raw multiplicity of a class representative under the accelerated pass,
/// i.e. how often that single occurrence is seen before correction.
inline std::uint64_t audit_divisor(int k, bool directed, ClassId id) {
  const auto& table = class_table(k, directed);
  const auto g = graph_from_code(table.representative(id));
  const auto raw = raw_census(g, k, directed);
  for (std::size_t c = 0; c < raw.size(); ++c)
    if (static_cast<ClassId>(c) != id && raw[c] != 0)
      throw InternalError("representative of class " + std::to_string(id) + " also counted as class " +
                          std::to_string(c));
  return raw[static_cast<std::size_t>(id)];
}

struct OracleCheck {
  MotifHistogram fast;
  OracleReport oracle;
  std::vector<ClassId> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/// Runs both paths and lists every class where they disagree. The fast
/// total is checked against the budget first so oversized graphs are
/// refused without enumerating.
inline OracleCheck oracle_check(const DirectedGraph& g, int k, bool directed, const CensusOptions& census_opts,
                                const OracleOptions& oracle_opts) {
  OracleCheck out;
  out.fast = census(g, k, directed, census_opts);
  if (out.fast.total() > oracle_opts.budget)
    throw BudgetExceeded("graph has " + std::to_string(out.fast.total()) + " connected " + std::to_string(k) +
                         "-subgraphs, over the oracle budget of " + std::to_string(oracle_opts.budget));
  out.oracle = oracle_histogram(g, k, directed, oracle_opts);
  for (std::size_t c = 0; c < out.fast.counts.size(); ++c)
    if (out.fast.counts[c] != out.oracle.histogram.counts[c]) out.mismatches.push_back(static_cast<ClassId>(c));
  return out;
}

}  // namespace motif
