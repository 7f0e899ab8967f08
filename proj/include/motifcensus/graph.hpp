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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "motifcensus/error.hpp"

namespace motif {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Relation of a neighbor x to a vertex v: A = bidirected, B = v->x only,
/// C = x->v only.
enum class Part : std::uint8_t { A = 0, B = 1, C = 2 };

namespace detail {

inline std::uint64_t pair_key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

/// Compressed rows of sorted vertex lists.
struct Csr {
  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> data;

  std::span<const Vertex> row(Vertex v) const {
    return {data.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }

  static Csr from_rows(const std::vector<std::vector<Vertex>>& rows) {
    Csr c;
    c.offsets.reserve(rows.size() + 1);
    for (const auto& r : rows) {
      c.data.insert(c.data.end(), r.begin(), r.end());
      c.offsets.push_back(c.data.size());
    }
    return c;
  }
};

}  // namespace detail

/// Simple digraph on dense vertex ids with each vertex's neighborhood split
/// into bidirected, out-only and in-only lists. Immutable once built.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Builds from ordered pairs. Duplicates collapse; self-loops and
  /// out-of-range endpoints are rejected. Labels default to decimal ids.
  static DirectedGraph from_edges(std::size_t n, std::span<const Edge> edges,
                                  std::vector<std::string> labels = {}) {
    DirectedGraph g;
    g.n_ = n;
    if (labels.empty()) {
      labels.reserve(n);
      for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    } else if (labels.size() != n) {
      throw ConfigError("label count does not match vertex count");
    }
    g.labels_ = std::move(labels);

    std::vector<Edge> sorted(edges.begin(), edges.end());
    for (const auto& [u, v] : sorted) {
      if (u >= n || v >= n) throw ConfigError("edge endpoint out of range");
      if (u == v) throw ConfigError("self-loop in edge set");
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    g.edge_index_.reserve(sorted.size() * 2);
    for (const auto& [u, v] : sorted) g.edge_index_.insert(detail::pair_key(u, v));

    std::vector<std::vector<Vertex>> bi(n), out(n), in(n);
    for (const auto& [u, v] : sorted) {
      if (g.has_edge(v, u)) {
        bi[u].push_back(v);
        if (u < v) ++g.bidirected_pairs_;
      } else {
        out[u].push_back(v);
        in[v].push_back(u);
      }
    }
    g.m_ = sorted.size();
    g.bi_ = detail::Csr::from_rows(bi);
    g.out_ = detail::Csr::from_rows(out);
    g.in_ = detail::Csr::from_rows(in);
    return g;
  }

  std::size_t num_vertices() const noexcept { return n_; }
  /// Number of ordered pairs; a bidirected pair counts twice.
  std::size_t num_edges() const noexcept { return m_; }
  std::size_t num_bidirected_pairs() const noexcept { return bidirected_pairs_; }

  std::span<const Vertex> bi_nbrs(Vertex v) const { return bi_.row(v); }
  std::span<const Vertex> out_nbrs(Vertex v) const { return out_.row(v); }
  std::span<const Vertex> in_nbrs(Vertex v) const { return in_.row(v); }

  std::span<const Vertex> nbrs(Vertex v, Part p) const {
    switch (p) {
      case Part::A: return bi_nbrs(v);
      case Part::B: return out_nbrs(v);
      default: return in_nbrs(v);
    }
  }

  std::size_t degree(Vertex v) const {
    return bi_nbrs(v).size() + out_nbrs(v).size() + in_nbrs(v).size();
  }

  bool has_edge(Vertex u, Vertex v) const {
    return edge_index_.contains(detail::pair_key(u, v));
  }

  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// All ordered pairs, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> e;
    e.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      std::size_t before = e.size();
      for (Vertex v : bi_nbrs(u)) e.emplace_back(u, v);
      for (Vertex v : out_nbrs(u)) e.emplace_back(u, v);
      std::sort(e.begin() + static_cast<std::ptrdiff_t>(before), e.end());
    }
    return e;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t bidirected_pairs_ = 0;
  detail::Csr bi_, out_, in_;
  std::unordered_set<std::uint64_t> edge_index_;
  std::vector<std::string> labels_;
};

/// Undirected view of a digraph: one edge per adjacent pair.
class UndirectedSkeleton {
 public:
  UndirectedSkeleton() = default;

  static UndirectedSkeleton from_edges(std::size_t n, std::span<const Edge> edges) {
    UndirectedSkeleton s;
    s.n_ = n;
    std::vector<std::vector<Vertex>> rows(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw ConfigError("edge endpoint out of range");
      if (u == v) throw ConfigError("self-loop in edge set");
      if (u > v) std::swap(u, v);
      if (s.index_.insert(detail::pair_key(u, v)).second) {
        rows[u].push_back(v);
        rows[v].push_back(u);
      }
    }
    for (auto& r : rows) std::sort(r.begin(), r.end());
    s.adj_ = detail::Csr::from_rows(rows);
    return s;
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return index_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.row(v); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return index_.contains(detail::pair_key(u, v));
  }

  /// Edges {u,v} with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> e;
    e.reserve(num_edges());
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) e.emplace_back(u, v);
    return e;
  }

 private:
  std::size_t n_ = 0;
  detail::Csr adj_;
  std::unordered_set<std::uint64_t> index_;
};

inline UndirectedSkeleton skeleton(const DirectedGraph& g) {
  auto e = g.edges();
  return UndirectedSkeleton::from_edges(g.num_vertices(), e);
}

/// The three neighbor classes of one vertex with their sizes. The spans
/// view the graph, which must outlive them.
struct NeighborPartition {
  std::span<const Vertex> a, b, c;
  std::size_t na = 0, nb = 0, nc = 0;
};

inline std::vector<NeighborPartition> partition_neighbors(const DirectedGraph& g) {
  std::vector<NeighborPartition> parts(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto& p = parts[v];
    p.a = g.bi_nbrs(v);
    p.b = g.out_nbrs(v);
    p.c = g.in_nbrs(v);
    p.na = p.a.size();
    p.nb = p.b.size();
    p.nc = p.c.size();
  }
  return parts;
}

/// Union of the neighborhoods of `set`, minus `set` itself. Sorted.
inline std::vector<Vertex> adjacency_of_set(const DirectedGraph& g, std::span<const Vertex> set) {
  std::unordered_set<Vertex> inside(set.begin(), set.end());
  std::vector<Vertex> out;
  for (Vertex v : set)
    for (Part p : {Part::A, Part::B, Part::C})
      for (Vertex x : g.nbrs(v, p))
        if (!inside.contains(x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Same graph with every single-direction edge flipped.
inline DirectedGraph reverse_edges(const DirectedGraph& g) {
  auto e = g.edges();
  for (auto& [u, v] : e) std::swap(u, v);
  return DirectedGraph::from_edges(g.num_vertices(), e, g.labels());
}

/// Relabels vertex v as perm[v].
inline DirectedGraph permute_vertices(const DirectedGraph& g, std::span<const Vertex> perm) {
  auto e = g.edges();
  for (auto& [u, v] : e) {
    u = perm[u];
    v = perm[v];
  }
  std::vector<std::string> labels(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) labels[perm[v]] = g.label(v);
  return DirectedGraph::from_edges(g.num_vertices(), e, std::move(labels));
}

/// Every adjacent pair turned into a bidirected pair.
inline DirectedGraph symmetrize(const DirectedGraph& g) {
  auto e = g.edges();
  std::size_t m = e.size();
  for (std::size_t i = 0; i < m; ++i) e.emplace_back(e[i].second, e[i].first);
  return DirectedGraph::from_edges(g.num_vertices(), e, g.labels());
}

struct LoadOptions {
  bool drop_isolated = true;
};

struct LoadStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_isolated = 0;
};

struct LoadResult {
  DirectedGraph graph;
  LoadStats stats;
};

/// Parses "source target" lines. '#' and '%' start comment lines; blank
/// lines are skipped. Vertices are numbered by first appearance.
inline LoadResult load_edge_list(std::istream& in, const LoadOptions& opts = {}) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  LoadStats stats;

  auto intern = [&](std::string_view tok) {
    auto [it, fresh] = ids.try_emplace(std::string(tok), static_cast<Vertex>(labels.size()));
    if (fresh) labels.emplace_back(tok);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view rest(line);
    std::vector<std::string_view> tokens;
    while (!rest.empty()) {
      auto b = rest.find_first_not_of(" \t\r\v\f");
      if (b == std::string_view::npos) break;
      rest.remove_prefix(b);
      auto e = rest.find_first_of(" \t\r\v\f");
      tokens.push_back(rest.substr(0, e));
      rest.remove_prefix(e == std::string_view::npos ? rest.size() : e);
    }
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#' || tokens[0].front() == '%') continue;
    if (tokens.size() != 2)
      throw ParseError(lineno, "expected two vertex tokens, found " + std::to_string(tokens.size()));
    Vertex u = intern(tokens[0]);
    Vertex v = intern(tokens[1]);
    if (u == v) {
      ++stats.dropped_self_loops;
      continue;
    }
    if (!seen.insert(detail::pair_key(u, v)).second) {
      ++stats.dropped_duplicates;
      continue;
    }
    edges.emplace_back(u, v);
  }

  if (edges.empty()) throw EmptyGraphError("input contains no edges");

  std::size_t n = labels.size();
  if (opts.drop_isolated) {
    std::vector<char> used(n, 0);
    for (auto [u, v] : edges) used[u] = used[v] = 1;
    std::vector<Vertex> remap(n);
    std::vector<std::string> kept;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) {
        remap[v] = static_cast<Vertex>(kept.size());
        kept.push_back(std::move(labels[v]));
      }
    }
    stats.dropped_isolated = n - kept.size();
    for (auto& [u, v] : edges) {
      u = remap[u];
      v = remap[v];
    }
    labels = std::move(kept);
    n = labels.size();
  }

  LoadResult r;
  r.graph = DirectedGraph::from_edges(n, edges, std::move(labels));
  stats.n = n;
  stats.m = r.graph.num_edges();
  r.stats = stats;
  return r;
}

/// One "source target" line per ordered pair, using original labels.
inline void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace motif
