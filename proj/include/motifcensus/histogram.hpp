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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "motifcensus/checked.hpp"
#include "motifcensus/class_table.hpp"
#include "motifcensus/error.hpp"

namespace motif {

/// Occurrence count per class id for one graph and one order.
struct MotifHistogram {
  int k = 0;
  bool directed = true;
  std::vector<std::uint64_t> counts;

  std::uint64_t operator[](ClassId id) const { return counts.at(static_cast<std::size_t>(id)); }

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t = checked_add(t, c);
    return t;
  }

  friend bool operator==(const MotifHistogram&, const MotifHistogram&) = default;
};

struct CensusOptions {
  unsigned workers = 1;
  /// Replaces the class table's divisors when non-empty. Fault injection only.
  std::span<const std::uint64_t> divisor_override{};
};

/// Adds `src` into `dst` slot by slot.
inline void merge_counts(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = checked_add(dst[i], src[i]);
}

/// Divides pre-correction sums by each class's multiplicity. With the real
/// divisors every sum must divide exactly; an override skips that check so
/// a corrupted divisor surfaces as a wrong count instead of an exception.
inline MotifHistogram finalize(const ClassTable& table, std::vector<std::uint64_t> raw,
                               std::span<const std::uint64_t> divisor_override = {}) {
  auto divisors = divisor_override.empty() ? table.divisors() : divisor_override;
  if (raw.size() != table.size() || divisors.size() != table.size())
    throw InternalError("raw histogram size does not match class table");
  MotifHistogram h{table.order(), table.directed(), std::move(raw)};
  for (std::size_t c = 0; c < h.counts.size(); ++c) {
    if (divisors[c] == 0) throw InternalError("zero correction divisor");
    if (divisor_override.empty() && h.counts[c] % divisors[c] != 0)
      throw InternalError("pre-correction sum of class " + std::to_string(c) + " is not divisible by " +
                          std::to_string(divisors[c]));
    h.counts[c] /= divisors[c];
  }
  return h;
}

}  // namespace motif
