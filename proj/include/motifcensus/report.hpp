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
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "motifcensus/adjacency_code.hpp"
#include "motifcensus/class_table.hpp"
#include "motifcensus/histogram.hpp"
#include "motifcensus/nullmodel.hpp"
#include "motifcensus/oracle.hpp"

namespace motif {

enum class Format { kTsv, kJson };

struct GraphSummary {
  std::size_t n = 0;
  std::size_t m = 0;
};

inline const char* mode_name(bool directed) { return directed ? "directed" : "undirected"; }

/// Fixed six-decimal rendering; infinities print as inf / -inf.
inline std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

namespace detail {

inline nlohmann::ordered_json real_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline nlohmann::ordered_json class_json(const ClassTable& table, ClassId id) {
  const auto& rep = table.representative(id);
  nlohmann::ordered_json j;
  j["class_id"] = id;
  j["code"] = to_hex(rep);
  j["adjacency"] = to_matrix_string(rep);
  return j;
}

inline void class_cells(std::ostream& out, const ClassTable& table, ClassId id) {
  const auto& rep = table.representative(id);
  out << id << '\t' << to_hex(rep) << '\t' << to_matrix_string(rep);
}

}  // namespace detail

/// Nonzero classes by count descending, then id ascending.
inline std::vector<ClassId> ranked_classes(const MotifHistogram& h) {
  std::vector<ClassId> ids;
  for (std::size_t c = 0; c < h.counts.size(); ++c)
    if (h.counts[c] != 0) ids.push_back(static_cast<ClassId>(c));
  std::stable_sort(ids.begin(), ids.end(), [&](ClassId a, ClassId b) { return h[a] > h[b]; });
  return ids;
}

inline void write_counts(std::ostream& out, const MotifHistogram& h, const GraphSummary& g, Format fmt) {
  const auto& table = class_table(h.k, h.directed);
  const auto ids = ranked_classes(h);
  if (fmt == Format::kJson) {
    nlohmann::ordered_json j;
    j["k"] = h.k;
    j["mode"] = mode_name(h.directed);
    j["n"] = g.n;
    j["m"] = g.m;
    j["total"] = h.total();
    j["rows"] = nlohmann::ordered_json::array();
    for (auto id : ids) {
      auto row = detail::class_json(table, id);
      row["count"] = h[id];
      j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "# k=" << h.k << " mode=" << mode_name(h.directed) << " n=" << g.n << " m=" << g.m
      << " total=" << h.total() << '\n';
  out << "class_id\tcode\tadjacency\tcount\n";
  for (auto id : ids) {
    detail::class_cells(out, table, id);
    out << '\t' << h[id] << '\n';
  }
}

inline void write_classes(std::ostream& out, const ClassTable& table, Format fmt) {
  if (fmt == Format::kJson) {
    nlohmann::ordered_json j;
    j["k"] = table.order();
    j["mode"] = mode_name(table.directed());
    j["classes"] = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < table.size(); ++c) {
      auto row = detail::class_json(table, static_cast<ClassId>(c));
      row["k"] = table.order();
      row["divisor"] = table.divisor(static_cast<ClassId>(c));
      j["classes"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "# k=" << table.order() << " mode=" << mode_name(table.directed()) << " classes=" << table.size() << '\n';
  out << "class_id\tcode\tk\tdivisor\tadjacency\n";
  for (std::size_t c = 0; c < table.size(); ++c) {
    const auto id = static_cast<ClassId>(c);
    const auto& rep = table.representative(id);
    out << id << '\t' << to_hex(rep) << '\t' << table.order() << '\t' << table.divisor(id) << '\t'
        << to_matrix_string(rep) << '\n';
  }
}

inline void write_significance(std::ostream& out, const EnsembleStats& st, const GraphSummary& g,
                               const SwitchConfig& cfg, Format fmt) {
  const auto& table = class_table(st.k, st.directed);
  if (fmt == Format::kJson) {
    nlohmann::ordered_json j;
    j["k"] = st.k;
    j["mode"] = mode_name(st.directed);
    j["n"] = g.n;
    j["m"] = g.m;
    j["seed"] = cfg.seed;
    j["ensemble"] = st.ensemble_size;
    j["attempts"] = cfg.attempts_per_edge;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : st.rows) {
      auto row = detail::class_json(table, r.id);
      row["real"] = r.real;
      row["mean"] = r.mean;
      row["stddev"] = r.stddev;
      row["z"] = detail::real_json(r.z);
      row["p"] = r.p;
      j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "# k=" << st.k << " mode=" << mode_name(st.directed) << " n=" << g.n << " m=" << g.m
      << " seed=" << cfg.seed << " ensemble=" << st.ensemble_size << " attempts=" << cfg.attempts_per_edge << '\n';
  out << "class_id\tcode\tadjacency\treal\tmean\tstddev\tz\tp\n";
  for (const auto& r : st.rows) {
    detail::class_cells(out, table, r.id);
    out << '\t' << r.real << '\t' << format_real(r.mean) << '\t' << format_real(r.stddev) << '\t'
        << format_real(r.z) << '\t' << format_real(r.p) << '\n';
  }
}

inline void write_oracle_check(std::ostream& out, const OracleCheck& chk, const GraphSummary& g, Format fmt) {
  const auto& table = class_table(chk.fast.k, chk.fast.directed);
  const char* result = chk.passed() ? "pass" : "fail";
  if (fmt == Format::kJson) {
    nlohmann::ordered_json j;
    j["k"] = chk.fast.k;
    j["mode"] = mode_name(chk.fast.directed);
    j["n"] = g.n;
    j["m"] = g.m;
    j["total_fast"] = chk.fast.total();
    j["total_oracle"] = chk.oracle.total;
    j["result"] = result;
    j["mismatches"] = nlohmann::ordered_json::array();
    for (auto id : chk.mismatches) {
      auto row = detail::class_json(table, id);
      row["fast"] = chk.fast[id];
      row["oracle"] = chk.oracle.histogram[id];
      j["mismatches"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "# oracle-check k=" << chk.fast.k << " mode=" << mode_name(chk.fast.directed) << " n=" << g.n
      << " m=" << g.m << " total_fast=" << chk.fast.total() << " total_oracle=" << chk.oracle.total
      << " result=" << result << '\n';
  out << "class_id\tcode\tadjacency\tfast\toracle\n";
  for (auto id : chk.mismatches) {
    detail::class_cells(out, table, id);
    out << '\t' << chk.fast[id] << '\t' << chk.oracle.histogram[id] << '\n';
  }
}

}  // namespace motif
