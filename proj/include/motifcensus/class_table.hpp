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
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "motifcensus/adjacency_code.hpp"
#include "motifcensus/error.hpp"

namespace motif {

using ClassId = std::int32_t;
inline constexpr ClassId kNoClass = -1;

/// Number of connected induced anchors (vertex subsets of size k-2) whose
/// adjacency covers the other two vertices. This is how many times the
/// vertex / edge / triple passes see one occurrence of the graph.
inline std::uint64_t correction_divisor(const AdjacencyCode& rep) {
  validate(rep);
  const int k = rep.k;
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) != k - 2) continue;
    if (!skeleton_connected_on(rep, mask)) continue;
    bool covered = true;
    for (int w = 0; w < k && covered; ++w)
      if (!(mask >> w & 1u)) covered = (rep.neighbor_mask(w) & mask) != 0;
    if (covered) ++count;
  }
  return count;
}

/// Every connected isomorphism class of order k, numbered by the rank of
/// its canonical code.
class ClassTable {
 public:
  static ClassTable enumerate(int k, bool directed) {
    if (k < kMinOrder || k > kMaxOrder)
      throw ConfigError("class order must be in [3,5], got " + std::to_string(k));
    ClassTable t;
    t.k_ = k;
    t.directed_ = directed;

    const int bits = compact_bits(k, directed);
    const std::uint32_t count = 1u << bits;
    t.class_of_index_.assign(count, static_cast<std::int16_t>(kNoClass));
    std::vector<char> seen(count, 0);

    // Position maps per permutation, for the orbit sweep.
    const auto& perms = permutations(k);
    std::vector<std::array<std::uint8_t, kMaxOrder * kMaxOrder>> posmap(perms.size());
    for (std::size_t p = 0; p < perms.size(); ++p)
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) posmap[p][i * k + j] = static_cast<std::uint8_t>(perms[p][i] * k + perms[p][j]);

    // compact_index is monotone in the packed code, so the first unseen
    // index of each orbit is its minimum: the canonical code.
    for (std::uint32_t idx = 0; idx < count; ++idx) {
      if (seen[idx]) continue;
      const AdjacencyCode code = expand_index(k, directed, idx);
      const bool connected = skeleton_connected(code);
      const ClassId id = connected ? static_cast<ClassId>(t.codes_.size()) : kNoClass;
      if (connected) t.codes_.push_back(code);
      for (const auto& pm : posmap) {
        AdjacencyCode q{code.k, code.directed, 0};
        for (std::uint32_t b = code.bits; b; b &= b - 1) q.bits |= 1u << pm[std::countr_zero(b)];
        const std::uint32_t qi = compact_index(q);
        seen[qi] = 1;
        t.class_of_index_[qi] = static_cast<std::int16_t>(id);
      }
    }

    t.divisors_.reserve(t.codes_.size());
    for (const auto& c : t.codes_) {
      const auto d = correction_divisor(c);
      if (d == 0) throw InternalError("class " + to_hex(c) + " has correction divisor 0");
      t.divisors_.push_back(d);
    }
    return t;
  }

  int order() const noexcept { return k_; }
  bool directed() const noexcept { return directed_; }
  std::size_t size() const noexcept { return codes_.size(); }

  const AdjacencyCode& representative(ClassId id) const { return codes_.at(static_cast<std::size_t>(id)); }
  std::uint64_t divisor(ClassId id) const { return divisors_.at(static_cast<std::size_t>(id)); }
  std::span<const AdjacencyCode> codes() const noexcept { return codes_; }
  std::span<const std::uint64_t> divisors() const noexcept { return divisors_; }

  /// Class of an arbitrarily labeled code; kNoClass when disconnected.
  ClassId class_of(const AdjacencyCode& c) const {
    if (c.k != k_ || c.directed != directed_) throw ConfigError("adjacency code does not match class table");
    return class_of_index_[compact_index(c)];
  }

  /// Class whose canonical code is exactly `canonical`; kNoClass if none.
  ClassId find(const AdjacencyCode& canonical) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), canonical);
    if (it == codes_.end() || *it != canonical) return kNoClass;
    return static_cast<ClassId>(it - codes_.begin());
  }

 private:
  int k_ = 0;
  bool directed_ = true;
  std::vector<AdjacencyCode> codes_;
  std::vector<std::uint64_t> divisors_;
  std::vector<std::int16_t> class_of_index_;
};

inline ClassTable enumerate_classes(int k, bool directed) { return ClassTable::enumerate(k, directed); }

/// Shared, lazily built table for (k, directed).
inline const ClassTable& class_table(int k, bool directed) {
  if (k < kMinOrder || k > kMaxOrder)
    throw ConfigError("class order must be in [3,5], got " + std::to_string(k));
  static std::array<std::once_flag, 6> once;
  static std::array<std::unique_ptr<ClassTable>, 6> tables;
  const auto slot = static_cast<std::size_t>((k - kMinOrder) * 2 + (directed ? 1 : 0));
  std::call_once(once[slot], [&] { tables[slot] = std::make_unique<ClassTable>(ClassTable::enumerate(k, directed)); });
  return *tables[slot];
}

}  // namespace motif
