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
#include <array>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motifcensus/error.hpp"

namespace motif {

inline constexpr int kMinOrder = 3;
inline constexpr int kMaxOrder = 5;

/// A digraph on k <= 5 vertices as a row-major k*k bit matrix: bit i*k+j is
/// the edge i->j. Undirected codes are symmetric. Ordering compares the
/// packed bits as an unsigned integer, which is what canonical form
/// minimizes.
struct AdjacencyCode {
  std::uint8_t k = 0;
  bool directed = true;
  std::uint32_t bits = 0;

  static constexpr std::uint32_t pos(int k, int i, int j) { return static_cast<std::uint32_t>(i * k + j); }

  bool bit(int i, int j) const { return (bits >> pos(k, i, j)) & 1u; }

  /// Sets i->j (and j->i for undirected codes).
  void set(int i, int j) {
    bits |= 1u << pos(k, i, j);
    if (!directed) bits |= 1u << pos(k, j, i);
  }

  void set_bidirected(int i, int j) {
    bits |= 1u << pos(k, i, j);
    bits |= 1u << pos(k, j, i);
  }

  bool adjacent(int i, int j) const { return bit(i, j) || bit(j, i); }

  /// Skeleton neighbors of v as a vertex bitmask.
  std::uint32_t neighbor_mask(int v) const {
    std::uint32_t m = 0;
    for (int u = 0; u < k; ++u)
      if (u != v && adjacent(u, v)) m |= 1u << u;
    return m;
  }

  static AdjacencyCode from_edges(int k, bool directed, std::initializer_list<std::pair<int, int>> edges) {
    AdjacencyCode c{static_cast<std::uint8_t>(k), directed, 0};
    for (auto [i, j] : edges) c.set(i, j);
    return c;
  }

  friend bool operator==(const AdjacencyCode&, const AdjacencyCode&) = default;
  friend auto operator<=>(const AdjacencyCode& a, const AdjacencyCode& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.directed <=> b.directed; c != 0) return c;
    return a.bits <=> b.bits;
  }
};

/// Bits of the code with the diagonal (and for undirected codes the upper
/// triangle) squeezed out; dense index into per-order lookup tables.
inline std::uint32_t compact_index(const AdjacencyCode& c) {
  std::uint32_t idx = 0;
  int out = 0;
  const int k = c.k;
  if (c.directed) {
    for (int p = 0; p < k * k; ++p) {
      if (p / k == p % k) continue;
      idx |= ((c.bits >> p) & 1u) << out++;
    }
  } else {
    for (int p = 0; p < k * k; ++p) {
      if (p / k <= p % k) continue;
      idx |= ((c.bits >> p) & 1u) << out++;
    }
  }
  return idx;
}

/// Inverse of compact_index.
inline AdjacencyCode expand_index(int k, bool directed, std::uint32_t idx) {
  AdjacencyCode c{static_cast<std::uint8_t>(k), directed, 0};
  int in = 0;
  for (int p = 0; p < k * k; ++p) {
    int i = p / k, j = p % k;
    if (directed ? i == j : i <= j) continue;
    if ((idx >> in++) & 1u) c.set(i, j);
  }
  return c;
}

inline int compact_bits(int k, bool directed) { return directed ? k * (k - 1) : k * (k - 1) / 2; }

/// All permutations of 0..k-1 in lexicographic order.
inline const std::vector<std::array<std::uint8_t, kMaxOrder>>& permutations(int k) {
  static const auto table = [] {
    std::array<std::vector<std::array<std::uint8_t, kMaxOrder>>, kMaxOrder + 1> t;
    for (int order = 1; order <= kMaxOrder; ++order) {
      std::array<std::uint8_t, kMaxOrder> p{};
      std::iota(p.begin(), p.begin() + order, std::uint8_t{0});
      do {
        t[order].push_back(p);
      } while (std::next_permutation(p.begin(), p.begin() + order));
    }
    return t;
  }();
  return table.at(static_cast<std::size_t>(k));
}

/// Vertex i of `c` becomes vertex perm[i].
inline AdjacencyCode permute(const AdjacencyCode& c, std::span<const std::uint8_t> perm) {
  AdjacencyCode out{c.k, c.directed, 0};
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.k; ++j)
      if (c.bit(i, j)) out.bits |= 1u << AdjacencyCode::pos(c.k, perm[i], perm[j]);
  return out;
}

inline AdjacencyCode transpose(const AdjacencyCode& c) {
  AdjacencyCode out{c.k, c.directed, 0};
  for (int i = 0; i < c.k; ++i)
    for (int j = 0; j < c.k; ++j)
      if (c.bit(i, j)) out.bits |= 1u << AdjacencyCode::pos(c.k, j, i);
  return out;
}

inline void validate(const AdjacencyCode& c) {
  if (c.k < kMinOrder || c.k > kMaxOrder)
    throw ConfigError("adjacency code order must be in [3,5], got " + std::to_string(c.k));
  if (c.bits >> (c.k * c.k)) throw ConfigError("adjacency code has bits beyond k*k");
  for (int i = 0; i < c.k; ++i) {
    if (c.bit(i, i)) throw ConfigError("adjacency code has a self-loop");
    if (!c.directed)
      for (int j = 0; j < c.k; ++j)
        if (c.bit(i, j) != c.bit(j, i)) throw ConfigError("undirected adjacency code is not symmetric");
  }
}

/// Minimum code over all k! relabelings. Equal for two graphs exactly when
/// they are isomorphic.
inline AdjacencyCode canonical_code(const AdjacencyCode& c) {
  validate(c);
  AdjacencyCode best = c;
  for (const auto& p : permutations(c.k)) {
    AdjacencyCode q = permute(c, std::span(p.data(), c.k));
    if (q.bits < best.bits) best = q;
  }
  return best;
}

/// Connectivity of the underlying undirected graph.
inline bool skeleton_connected(const AdjacencyCode& c) {
  const std::uint32_t all = (1u << c.k) - 1;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < c.k; ++v)
      if (frontier >> v & 1u) next |= c.neighbor_mask(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

/// Connectivity of the skeleton induced on vertex subset `mask`.
inline bool skeleton_connected_on(const AdjacencyCode& c, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t start = mask & (~mask + 1);
  std::uint32_t seen = start, frontier = start;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < c.k; ++v)
      if (frontier >> v & 1u) next |= c.neighbor_mask(v) & mask;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == mask;
}

/// Packed bits as fixed-width lowercase hex.
inline std::string to_hex(const AdjacencyCode& c) {
  char buf[16];
  const int digits = (c.k * c.k + 3) / 4;
  std::snprintf(buf, sizeof buf, "%0*x", digits, c.bits);
  return buf;
}

/// Rows of 0/1 separated by '/', e.g. "011/000/000".
inline std::string to_matrix_string(const AdjacencyCode& c) {
  std::string s;
  for (int i = 0; i < c.k; ++i) {
    if (i) s += '/';
    for (int j = 0; j < c.k; ++j) s += c.bit(i, j) ? '1' : '0';
  }
  return s;
}

inline AdjacencyCode parse_matrix_string(std::string_view s, bool directed) {
  AdjacencyCode c{0, directed, 0};
  int rows = 0;
  std::size_t start = 0;
  std::vector<std::string_view> parts;
  while (true) {
    auto slash = s.find('/', start);
    parts.push_back(s.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  const int k = static_cast<int>(parts.size());
  if (k < kMinOrder || k > kMaxOrder) throw ConfigError("matrix string must have 3 to 5 rows");
  c.k = static_cast<std::uint8_t>(k);
  for (auto row : parts) {
    if (static_cast<int>(row.size()) != k) throw ConfigError("matrix string is not square");
    for (int j = 0; j < k; ++j) {
      if (row[j] == '1')
        c.bits |= 1u << AdjacencyCode::pos(k, rows, j);
      else if (row[j] != '0')
        throw ConfigError("matrix string may only contain 0, 1 and '/'");
    }
    ++rows;
  }
  validate(c);
  return c;
}

}  // namespace motif
