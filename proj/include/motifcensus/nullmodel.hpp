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

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <unordered_set>
#include <vector>

#include "motifcensus/census.hpp"
#include "motifcensus/error.hpp"
#include "motifcensus/graph.hpp"
#include "motifcensus/histogram.hpp"
#include "motifcensus/parallel.hpp"

namespace motif {

/// Randomization and ensemble settings. The generator is std::mt19937_64,
/// whose output sequence is fixed by the C++ standard; bounded draws use
/// rejection sampling so results do not depend on the standard library.
struct SwitchConfig {
  unsigned attempts_per_edge = 3;
  std::uint64_t seed = 1;
  /// 0 picks default_ensemble_size(k).
  std::size_t ensemble_size = 0;
};

inline std::size_t default_ensemble_size(int k) { return k == 3 ? 100 : (k == 4 ? 10 : 5); }

/// SplitMix64 step; used to derive one independent seed per ensemble member.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t member_seed(std::uint64_t seed, std::size_t member) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(member) + 1));
}

/// Uniform integer in [0, n), n > 0.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % n;
}

/// Degree-preserving edge switching. Each of attempts_per_edge * m trials
/// picks two edges of the same kind (single-direction or bidirected) and
/// exchanges their heads: a->b, c->d become a->d, c->b. A trial is rejected
/// when it would create a self-loop, a duplicate, or touch a pair that is
/// already adjacent (which would merge two single edges into a bidirected
/// pair). Every vertex keeps its (bidirected, out, in) degrees.
inline DirectedGraph randomize(const DirectedGraph& g, unsigned attempts_per_edge, std::uint64_t seed) {
  std::vector<Edge> single, both;
  for (auto [u, v] : g.edges()) {
    if (!g.has_edge(v, u))
      single.emplace_back(u, v);
    else if (u < v)
      both.emplace_back(u, v);
  }
  std::unordered_set<std::uint64_t> present;
  present.reserve(g.num_edges() * 2);
  for (auto [u, v] : g.edges()) present.insert(detail::pair_key(u, v));
  auto adjacent = [&](Vertex a, Vertex b) {
    return present.contains(detail::pair_key(a, b)) || present.contains(detail::pair_key(b, a));
  };

  std::mt19937_64 rng(seed);
  const std::uint64_t trials = static_cast<std::uint64_t>(attempts_per_edge) * g.num_edges();
  const std::uint64_t kinds = single.size() + both.size();
  for (std::uint64_t t = 0; t < trials && kinds > 0; ++t) {
    const std::uint64_t r = uniform_index(rng, kinds);
    const bool is_single = r < single.size();
    auto& pool = is_single ? single : both;
    if (pool.size() < 2) continue;
    const std::size_t i = is_single ? r : r - single.size();
    const std::size_t j = uniform_index(rng, pool.size());
    if (i == j) continue;
    auto [a, b] = pool[i];
    auto [c, d] = pool[j];
    if (!is_single && (rng() & 1u)) std::swap(c, d);
    if (a == d || c == b || adjacent(a, d) || adjacent(c, b)) continue;

    present.erase(detail::pair_key(a, b));
    present.erase(detail::pair_key(c, d));
    present.insert(detail::pair_key(a, d));
    present.insert(detail::pair_key(c, b));
    if (!is_single) {
      present.erase(detail::pair_key(b, a));
      present.erase(detail::pair_key(d, c));
      present.insert(detail::pair_key(d, a));
      present.insert(detail::pair_key(b, c));
    }
    pool[i] = {a, d};
    pool[j] = {c, b};
  }

  std::vector<Edge> edges = single;
  for (auto [u, v] : both) {
    edges.emplace_back(u, v);
    edges.emplace_back(v, u);
  }
  return DirectedGraph::from_edges(g.num_vertices(), edges, g.labels());
}

inline DirectedGraph randomize(const DirectedGraph& g, const SwitchConfig& cfg) {
  return randomize(g, cfg.attempts_per_edge, cfg.seed);
}

struct ClassStats {
  ClassId id = kNoClass;
  std::uint64_t real = 0;
  double mean = 0;
  double stddev = 0;
  /// +-infinity when stddev is 0 and real differs from the mean.
  double z = 0;
  /// Fraction of ensemble members whose count is >= real.
  double p = 0;
  bool z_infinite() const { return std::isinf(z); }
};

/// (real - mean) / stddev; 0 when both the spread and the difference are
/// 0, signed infinity when only the spread is.
inline double z_score(double real, double mean, double stddev) {
  const double diff = real - mean;
  if (stddev > 0) return diff / stddev;
  if (diff == 0) return 0;
  return diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

struct EnsembleStats {
  int k = 0;
  bool directed = true;
  std::size_t ensemble_size = 0;
  MotifHistogram real;
  /// Classes present in the real graph or in any ensemble member, by id.
  std::vector<ClassStats> rows;
};

/// Census of g against an ensemble of switched copies. Members are seeded
/// independently from cfg.seed, so results do not depend on `workers`.
/// Undirected mode randomizes the skeleton as an all-bidirected graph.
inline EnsembleStats significance(const DirectedGraph& g, int k, bool directed, const SwitchConfig& cfg,
                                  unsigned workers = 1) {
  check_order(k);
  const std::size_t size = cfg.ensemble_size ? cfg.ensemble_size : default_ensemble_size(k);
  if (size < 2) throw ConfigError("ensemble size must be at least 2");

  const DirectedGraph base = directed ? DirectedGraph{} : symmetrize(g);
  const DirectedGraph& source = directed ? g : base;

  EnsembleStats st;
  st.k = k;
  st.directed = directed;
  st.ensemble_size = size;
  st.real = census(g, k, directed, {workers, {}});

  std::vector<MotifHistogram> members(size);
  parallel_jobs(
      size, workers, [] { return 0; },
      [&](int&, std::size_t i) {
        const auto rg = randomize(source, cfg.attempts_per_edge, member_seed(cfg.seed, i));
        members[i] = census(rg, k, directed);
      },
      [](int&) {}, 1);

  const auto n = static_cast<double>(size);
  for (std::size_t c = 0; c < st.real.counts.size(); ++c) {
    const std::uint64_t real = st.real.counts[c];
    bool any = real != 0;
    double sum = 0;
    std::size_t at_least = 0;
    for (const auto& m : members) {
      any = any || m.counts[c] != 0;
      sum += static_cast<double>(m.counts[c]);
      if (m.counts[c] >= real) ++at_least;
    }
    if (!any) continue;
    ClassStats cs;
    cs.id = static_cast<ClassId>(c);
    cs.real = real;
    cs.mean = sum / n;
    double ss = 0;
    for (const auto& m : members) {
      const double d = static_cast<double>(m.counts[c]) - cs.mean;
      ss += d * d;
    }
    cs.stddev = std::sqrt(ss / (n - 1));
    cs.z = z_score(static_cast<double>(real), cs.mean, cs.stddev);
    cs.p = static_cast<double>(at_least) / n;
    st.rows.push_back(cs);
  }
  return st;
}

}  // namespace motif
