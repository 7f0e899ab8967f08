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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "motifcensus/checked.hpp"
#include "motifcensus/graph.hpp"
#include "motifcensus/pattern_lookup.hpp"

namespace motif {

/// Sizes of the neighbor sets around one anchor and the edge counts
/// between every pair of them. Dense grid, reset in time proportional to
/// the square of the number of non-empty sets.
template <class Lookup>
class SetPairCounters {
 public:
  static constexpr int kSets = Lookup::kSets;

  SetPairCounters() : dir_(kSets * kSets, 0), bi_(kSets * kSets, 0) {}

  void add_member(int set, std::uint64_t count = 1) {
    if (count == 0) return;
    if (size_[set] == 0) nonempty_.push_back(set);
    size_[set] += count;
  }
  /// Edges x->y (single direction) with x in `from`, y in `to`.
  void add_directed(int from, int to, std::uint64_t count = 1) { dir_[from * kSets + to] += count; }
  /// Bidirected pairs (or, for undirected lookups, plain edges).
  void add_bidirected(int a, int b, std::uint64_t count = 1) {
    if (a > b) std::swap(a, b);
    bi_[a * kSets + b] += count;
  }

  std::uint64_t size(int set) const { return size_[set]; }
  std::uint64_t directed(int from, int to) const { return dir_[from * kSets + to]; }
  std::uint64_t bidirected(int a, int b) const {
    if (a > b) std::swap(a, b);
    return bi_[a * kSets + b];
  }
  std::span<const int> nonempty() const noexcept { return nonempty_; }

  /// Adds every pattern frequency of this anchor into `raw`. Same-set
  /// pairs contribute C(n,2) minus their internal edges to the no-edge
  /// pattern; cross-set pairs contribute n_i*n_j minus the edges between
  /// them. Each edge kind feeds its own variant.
  void accumulate(const Lookup& lk, int base, std::span<std::uint64_t> raw) {
    std::sort(nonempty_.begin(), nonempty_.end());
    auto add = [&](int i, int j, int var, u128 v) {
      if (v == 0) return;
      auto& slot = raw[static_cast<std::size_t>(lk.at(base, i, j, var))];
      slot = checked_add(slot, checked_narrow(v));
    };
    for (std::size_t a = 0; a < nonempty_.size(); ++a) {
      const int i = nonempty_[a];
      const u128 n = size_[i];
      const u128 d = dir_[i * kSets + i];
      const u128 b = bi_[i * kSets + i];
      add(i, i, kNoEdge, nonnegative_sub(n * (n - 1) / 2, d + b, "same-set pairs"));
      if constexpr (Lookup::kDirected) {
        add(i, i, kForward, d);
        add(i, i, kBoth, b);
      } else {
        add(i, i, kForward, b);
      }
      for (std::size_t c = a + 1; c < nonempty_.size(); ++c) {
        const int j = nonempty_[c];
        const u128 fwd = dir_[i * kSets + j];
        const u128 bwd = dir_[j * kSets + i];
        const u128 both = bi_[i * kSets + j];
        add(i, j, kNoEdge, nonnegative_sub(static_cast<u128>(size_[i]) * size_[j], fwd + bwd + both, "cross-set pairs"));
        if constexpr (Lookup::kDirected) {
          add(i, j, kForward, fwd);
          add(i, j, kBackward, bwd);
          add(i, j, kBoth, both);
        } else {
          add(i, j, kForward, both);
        }
      }
    }
  }

  void clear() {
    for (int i : nonempty_) {
      for (int j : nonempty_) {
        dir_[i * kSets + j] = 0;
        bi_[i * kSets + j] = 0;
      }
      size_[i] = 0;
    }
    nonempty_.clear();
  }

 private:
  std::array<std::uint64_t, kSets> size_{};
  std::vector<std::uint64_t> dir_;
  std::vector<std::uint64_t> bi_;
  std::vector<int> nonempty_;
};

/// Splits adj(anchor) into descriptor sets and counts edges between them.
/// Holds an n-sized scratch array; one instance per worker.
template <class Lookup>
class AnchorPartitioner {
 public:
  static constexpr int kAnchor = Lookup::kAnchor;
  static constexpr int kRelations = Lookup::kRelations;

  explicit AnchorPartitioner(std::size_t n) : desc_(n, 0) {}

  /// Directed form: relation of x to anchor vertex a is A/B/C of a.
  void run(const DirectedGraph& g, const std::array<Vertex, kAnchor>& anchor, SetPairCounters<Lookup>& counters)
    requires(Lookup::kDirected)
  {
    members_.clear();
    for (int p = 0; p < kAnchor; ++p) {
      const int weight = ipow(kRelations, p);
      for (Part part : {Part::A, Part::B, Part::C}) {
        const int rel = static_cast<int>(part) + 1;
        for (Vertex x : g.nbrs(anchor[static_cast<std::size_t>(p)], part)) mark(anchor, x, rel * weight);
      }
    }
    for (Vertex x : members_) counters.add_member(desc_[x] - 1);
    for (Vertex x : members_) {
      const int sx = desc_[x] - 1;
      for (Vertex y : g.out_nbrs(x))
        if (desc_[y]) counters.add_directed(sx, desc_[y] - 1);
      for (Vertex y : g.bi_nbrs(x))
        if (y > x && desc_[y]) counters.add_bidirected(sx, desc_[y] - 1);
    }
    reset();
  }

  /// Undirected form over the skeleton.
  void run(const UndirectedSkeleton& s, const std::array<Vertex, kAnchor>& anchor, SetPairCounters<Lookup>& counters)
    requires(!Lookup::kDirected)
  {
    members_.clear();
    for (int p = 0; p < kAnchor; ++p)
      for (Vertex x : s.neighbors(anchor[static_cast<std::size_t>(p)])) mark(anchor, x, 1 << p);
    for (Vertex x : members_) counters.add_member(desc_[x] - 1);
    for (Vertex x : members_) {
      const int sx = desc_[x] - 1;
      for (Vertex y : s.neighbors(x))
        if (y > x && desc_[y]) counters.add_bidirected(sx, desc_[y] - 1);
    }
    reset();
  }

  /// (vertex, set index) for every member of the last run, in discovery order.
  const std::vector<std::pair<Vertex, int>>& last_members() const noexcept { return last_; }

 private:
  void mark(const std::array<Vertex, kAnchor>& anchor, Vertex x, int amount) {
    for (Vertex a : anchor)
      if (a == x) return;
    if (desc_[x] == 0) members_.push_back(x);
    desc_[x] = static_cast<std::uint8_t>(desc_[x] + amount);
  }

  void reset() {
    last_.clear();
    for (Vertex x : members_) {
      last_.emplace_back(x, desc_[x] - 1);
      desc_[x] = 0;
    }
  }

  std::vector<std::uint8_t> desc_;
  std::vector<Vertex> members_;
  std::vector<std::pair<Vertex, int>> last_;
};

}  // namespace motif
