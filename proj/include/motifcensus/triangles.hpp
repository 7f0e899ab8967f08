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
#include <vector>

#include "motifcensus/graph.hpp"

namespace motif {

/// Calls fn(a, b, c) once per skeleton triangle with a < b < c.
///
/// Each edge is oriented toward the endpoint with the larger (degree, id);
/// a triangle is reported from its lowest-ranked vertex by intersecting
/// two forward lists. Forward lists have O(sqrt m) length, so the whole
/// pass is O(m sqrt m).
template <class Fn>
void for_each_triangle(const UndirectedSkeleton& s, Fn&& fn) {
  const std::size_t n = s.num_vertices();
  auto ranks_above = [&](Vertex u, Vertex w) {
    const auto du = s.degree(u), dw = s.degree(w);
    return dw > du || (dw == du && w > u);
  };
  std::vector<std::vector<Vertex>> rows(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : s.neighbors(u))
      if (ranks_above(u, w)) rows[u].push_back(w);
  const auto fwd = detail::Csr::from_rows(rows);
  rows.clear();
  rows.shrink_to_fit();

  for (Vertex u = 0; u < n; ++u) {
    const auto fu = fwd.row(u);
    for (Vertex w : fu) {
      const auto fw = fwd.row(w);
      auto i = fu.begin();
      auto j = fw.begin();
      while (i != fu.end() && j != fw.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          std::array<Vertex, 3> t{u, w, *i};
          if (t[0] > t[1]) std::swap(t[0], t[1]);
          if (t[1] > t[2]) std::swap(t[1], t[2]);
          if (t[0] > t[1]) std::swap(t[0], t[1]);
          fn(t[0], t[1], t[2]);
          ++i;
          ++j;
        }
      }
    }
  }
}

inline std::vector<std::array<Vertex, 3>> list_triangles(const UndirectedSkeleton& s) {
  std::vector<std::array<Vertex, 3>> out;
  for_each_triangle(s, [&](Vertex a, Vertex b, Vertex c) { out.push_back({a, b, c}); });
  return out;
}

}  // namespace motif
