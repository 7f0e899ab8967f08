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
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "motifcensus/adjacency_code.hpp"
#include "motifcensus/class_table.hpp"
#include "motifcensus/error.hpp"

namespace motif {

/// How an outside vertex x attaches to one anchor vertex p. Directed:
/// kBi = A (p<->x), kOut = B (p->x only), kIn = C (x->p only).
/// Undirected lookups only use kNone / kBi (read as "adjacent").
enum Relation : std::uint8_t { kNone = 0, kBi = 1, kOut = 2, kIn = 3 };

/// Edge between the two outside vertices v1 (in set i) and v2 (in set j).
/// Undirected lookups only use kNoEdge / kForward (read as "edge").
enum Variant : std::uint8_t { kNoEdge = 0, kForward = 1, kBackward = 2, kBoth = 3 };

constexpr int ipow(int b, int e) { return e == 0 ? 1 : b * ipow(b, e - 1); }

/// Precomputed class of "anchor + v1 + v2" for every anchor labeling
/// (base), every pair of neighbor sets and every v1-v2 edge variant.
/// A neighbor set is identified by its descriptor: the relation of its
/// members to each anchor vertex, packed in base kRelations with anchor
/// vertex 0 as the lowest digit; set index = descriptor - 1.
template <int Anchor, bool Directed>
class PatternLookup {
 public:
  static constexpr int kAnchor = Anchor;
  static constexpr int kOrder = Anchor + 2;
  static constexpr bool kDirected = Directed;
  static constexpr int kRelations = Directed ? 4 : 2;
  static constexpr int kSets = ipow(kRelations, Anchor) - 1;
  static constexpr int kVariants = Directed ? 4 : 2;

  /// `bases` hold anchor adjacency as row-major Anchor*Anchor bit matrices.
  static PatternLookup build(std::vector<std::uint32_t> bases, const ClassTable& table) {
    if (table.order() != kOrder || table.directed() != Directed)
      throw ConfigError("class table does not match pattern lookup shape");
    PatternLookup lk;
    lk.bases_ = std::move(bases);
    lk.cells_.resize(lk.bases_.size() * kSets * kSets * kVariants);
    for (std::size_t b = 0; b < lk.bases_.size(); ++b)
      for (int i = 0; i < kSets; ++i)
        for (int j = 0; j < kSets; ++j)
          for (int var = 0; var < kVariants; ++var) {
            const AdjacencyCode code = lk.pattern(static_cast<int>(b), i, j, static_cast<Variant>(var));
            const ClassId id = table.class_of(code);
            if (id == kNoClass)
              throw InternalError("generated pattern " + to_matrix_string(code) + " is disconnected");
            lk.cells_[lk.slot(static_cast<int>(b), i, j, var)] = static_cast<std::int16_t>(id);
          }
    return lk;
  }

  static Relation relation(int set, int anchor_vertex) {
    return static_cast<Relation>((set + 1) / ipow(kRelations, anchor_vertex) % kRelations);
  }

  static int set_index(const std::array<Relation, Anchor>& rel) {
    int d = 0;
    for (int p = Anchor - 1; p >= 0; --p) d = d * kRelations + rel[static_cast<std::size_t>(p)];
    if (d == 0) throw ConfigError("neighbor set descriptor must relate to at least one anchor vertex");
    return d - 1;
  }

  /// The concrete k-vertex graph: anchor on 0..Anchor-1, v1 = Anchor,
  /// v2 = Anchor + 1.
  AdjacencyCode pattern(int base, int set_i, int set_j, Variant var) const {
    AdjacencyCode c{static_cast<std::uint8_t>(kOrder), Directed, 0};
    const std::uint32_t anchor_bits = bases_.at(static_cast<std::size_t>(base));
    for (int a = 0; a < Anchor; ++a)
      for (int b = 0; b < Anchor; ++b)
        if (anchor_bits >> (a * Anchor + b) & 1u) c.bits |= 1u << AdjacencyCode::pos(kOrder, a, b);
    attach(c, Anchor, set_i);
    attach(c, Anchor + 1, set_j);
    const int v1 = Anchor, v2 = Anchor + 1;
    if constexpr (Directed) {
      if (var == kForward || var == kBoth) c.bits |= 1u << AdjacencyCode::pos(kOrder, v1, v2);
      if (var == kBackward || var == kBoth) c.bits |= 1u << AdjacencyCode::pos(kOrder, v2, v1);
    } else if (var != kNoEdge) {
      c.set(v1, v2);
    }
    return c;
  }

  ClassId at(int base, int set_i, int set_j, int var) const { return cells_[slot(base, set_i, set_j, var)]; }

  std::size_t num_bases() const noexcept { return bases_.size(); }
  std::uint32_t base_bits(int base) const { return bases_.at(static_cast<std::size_t>(base)); }
  std::span<const std::int16_t> cells() const noexcept { return cells_; }

 private:
  static void attach(AdjacencyCode& c, int x, int set) {
    for (int p = 0; p < Anchor; ++p) {
      switch (relation(set, p)) {
        case kNone: break;
        case kBi: c.set_bidirected(p, x); break;
        case kOut: c.bits |= 1u << AdjacencyCode::pos(kOrder, p, x); break;
        case kIn: c.bits |= 1u << AdjacencyCode::pos(kOrder, x, p); break;
      }
    }
  }

  static std::size_t slot(int base, int i, int j, int var) {
    return ((static_cast<std::size_t>(base) * kSets + i) * kSets + j) * kVariants + var;
  }

  std::vector<std::uint32_t> bases_;
  std::vector<std::int16_t> cells_;
};

/// Vertex passes: anchor is a single vertex, sets A/B/C.
using PatternLookup3 = PatternLookup<1, true>;
/// Edge passes: base 0 is u<->v, base 1 is u->v; 15 sets.
using PatternLookup4 = PatternLookup<2, true>;
/// Triple passes: one base per size-3 class; 63 sets.
using PatternLookup5 = PatternLookup<3, true>;
/// Undirected triple passes: bases are the P3 and K3 canonical codes; 7 sets.
using PatternLookup5U = PatternLookup<3, false>;

inline constexpr int kBaseBidirected = 0;
inline constexpr int kBaseDirected = 1;

inline PatternLookup3 build_pattern_lookup_3() { return PatternLookup3::build({0u}, class_table(3, true)); }

inline PatternLookup4 build_pattern_lookup_4() {
  // Row-major 2x2: bit 1 is u->v, bit 2 is v->u.
  return PatternLookup4::build({0b0110u, 0b0010u}, class_table(4, true));
}

inline PatternLookup5 build_pattern_lookup_5() {
  std::vector<std::uint32_t> bases;
  for (const auto& c : class_table(3, true).codes()) bases.push_back(c.bits);
  return PatternLookup5::build(std::move(bases), class_table(5, true));
}

inline PatternLookup5U build_pattern_lookup_5u() {
  std::vector<std::uint32_t> bases;
  for (const auto& c : class_table(3, false).codes()) bases.push_back(c.bits);
  return PatternLookup5U::build(std::move(bases), class_table(5, false));
}

namespace detail {
template <class T, class F>
const T& lazy(F build) {
  static std::once_flag once;
  static std::unique_ptr<T> value;
  std::call_once(once, [&] { value = std::make_unique<T>(build()); });
  return *value;
}
}  // namespace detail

inline const PatternLookup3& pattern_lookup_3() { return detail::lazy<PatternLookup3>([] { return build_pattern_lookup_3(); }); }
inline const PatternLookup4& pattern_lookup_4() { return detail::lazy<PatternLookup4>([] { return build_pattern_lookup_4(); }); }
inline const PatternLookup5& pattern_lookup_5() { return detail::lazy<PatternLookup5>([] { return build_pattern_lookup_5(); }); }
inline const PatternLookup5U& pattern_lookup_5u() { return detail::lazy<PatternLookup5U>([] { return build_pattern_lookup_5u(); }); }

/// Which size-3 class a labeled triple belongs to, and the reordering that
/// makes its labeled code equal the class representative bit for bit.
struct TripleAlignment {
  ClassId base = kNoClass;
  std::array<std::uint8_t, 3> order{};  // position a of the aligned triple holds original vertex order[a]
};

/// Tries the six orderings lexicographically and keeps the first match.
inline TripleAlignment align_triple(const AdjacencyCode& labeled, const ClassTable& table3) {
  TripleAlignment out;
  out.base = table3.class_of(labeled);
  if (out.base == kNoClass) throw InternalError("triple " + to_matrix_string(labeled) + " is disconnected");
  const AdjacencyCode& rep = table3.representative(out.base);
  for (const auto& perm : permutations(3)) {
    AdjacencyCode q{3, labeled.directed, 0};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (labeled.bit(perm[a], perm[b])) q.bits |= 1u << AdjacencyCode::pos(3, a, b);
    if (q == rep) {
      out.order = {perm[0], perm[1], perm[2]};
      return out;
    }
  }
  throw InternalError("no ordering of triple matches its class representative");
}

/// align_triple for every labeled 3-vertex code, indexed by packed bits.
class TripleAligner {
 public:
  explicit TripleAligner(bool directed) {
    const auto& t3 = class_table(3, directed);
    table_.resize(1u << 9);
    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
      AdjacencyCode c{3, directed, bits};
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        if (c.bit(i, i)) ok = false;
        if (!directed)
          for (int j = 0; j < 3; ++j) ok = ok && c.bit(i, j) == c.bit(j, i);
      }
      if (ok && skeleton_connected(c)) table_[bits] = align_triple(c, t3);
    }
  }
  const TripleAlignment& operator()(std::uint32_t bits) const { return table_[bits]; }

 private:
  std::vector<TripleAlignment> table_;
};

inline const TripleAligner& triple_aligner(bool directed) {
  if (directed) return detail::lazy<TripleAligner>([] { return TripleAligner(true); });
  return detail::lazy<TripleAligner>([] { return TripleAligner(false); });
}

}  // namespace motif
