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

// Command-line front end: count, significance, classes, oracle-check.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "motifcensus/motifcensus.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;

struct RunConfig {
  std::string input;
  std::string output;
  int k = 3;
  bool undirected = false;
  std::string format = "tsv";
  std::uint64_t seed = 1;
  std::size_t ensemble = 0;
  unsigned attempts = 3;
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;
  bool keep_isolated = false;
  std::vector<std::string> fault_divisors;
};

motif::Format parse_format(const std::string& f) { return f == "json" ? motif::Format::kJson : motif::Format::kTsv; }

motif::LoadResult load(const RunConfig& cfg) {
  motif::LoadOptions opts;
  opts.drop_isolated = !cfg.keep_isolated;
  if (cfg.input == "-") return motif::load_edge_list(std::cin, opts);
  std::ifstream in(cfg.input);
  if (!in) throw motif::ConfigError("cannot open input file '" + cfg.input + "'");
  return motif::load_edge_list(in, opts);
}

void report_load(const motif::LoadStats& s) {
  std::fprintf(stderr, "loaded n=%zu m=%zu dropped_self_loops=%zu dropped_duplicates=%zu dropped_isolated=%zu\n", s.n,
               s.m, s.dropped_self_loops, s.dropped_duplicates, s.dropped_isolated);
}

/// Runs `body` with the chosen output stream; the file is written only
/// after `body` returns.
template <class Body>
void with_output(const RunConfig& cfg, Body&& body) {
  std::ostringstream buf;
  body(buf);
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << buf.str();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw motif::ConfigError("cannot open output file '" + cfg.output + "'");
  out << buf.str();
}

/// "id:value" pairs replacing class divisors; used to exercise the
/// mismatch path of oracle-check.
std::vector<std::uint64_t> divisor_overrides(const RunConfig& cfg) {
  if (cfg.fault_divisors.empty()) return {};
  const auto& table = motif::class_table(cfg.k, !cfg.undirected);
  std::vector<std::uint64_t> d(table.divisors().begin(), table.divisors().end());
  for (const auto& item : cfg.fault_divisors) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw motif::ConfigError("fault divisor must be id:value");
    std::size_t id = 0;
    std::uint64_t value = 0;
    try {
      id = std::stoul(item.substr(0, colon));
      value = std::stoull(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw motif::ConfigError("fault divisor must be id:value");
    }
    if (id >= d.size() || value == 0) throw motif::ConfigError("fault divisor out of range");
    d[id] = value;
  }
  return d;
}

double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

int cmd_count(const RunConfig& cfg) {
  const auto loaded = load(cfg);
  report_load(loaded.stats);
  const auto start = std::chrono::steady_clock::now();
  const auto h = motif::census(loaded.graph, cfg.k, !cfg.undirected, {cfg.workers, {}});
  const double secs = since(start);
  with_output(cfg, [&](std::ostream& out) {
    motif::write_counts(out, h, {loaded.graph.num_vertices(), loaded.graph.num_edges()}, parse_format(cfg.format));
  });
  std::fprintf(stderr, "n=%zu m=%zu total=%llu elapsed_seconds=%.6f\n", loaded.graph.num_vertices(),
               loaded.graph.num_edges(), static_cast<unsigned long long>(h.total()), secs);
  return kExitOk;
}

int cmd_significance(const RunConfig& cfg) {
  const auto loaded = load(cfg);
  report_load(loaded.stats);
  motif::SwitchConfig sw{cfg.attempts, cfg.seed, cfg.ensemble};
  const auto start = std::chrono::steady_clock::now();
  const auto st = motif::significance(loaded.graph, cfg.k, !cfg.undirected, sw, cfg.workers);
  const double secs = since(start);
  with_output(cfg, [&](std::ostream& out) {
    motif::write_significance(out, st, {loaded.graph.num_vertices(), loaded.graph.num_edges()}, sw,
                              parse_format(cfg.format));
  });
  std::fprintf(stderr, "ensemble=%zu elapsed_seconds=%.6f\n", st.ensemble_size, secs);
  return kExitOk;
}

int cmd_classes(const RunConfig& cfg) {
  motif::check_order(cfg.k);
  const auto& table = motif::class_table(cfg.k, !cfg.undirected);
  with_output(cfg, [&](std::ostream& out) { motif::write_classes(out, table, parse_format(cfg.format)); });
  return kExitOk;
}

int cmd_oracle_check(const RunConfig& cfg) {
  const auto loaded = load(cfg);
  report_load(loaded.stats);
  const auto divisors = divisor_overrides(cfg);
  const auto chk = motif::oracle_check(loaded.graph, cfg.k, !cfg.undirected, {cfg.workers, divisors},
                                       {cfg.workers, cfg.budget});
  with_output(cfg, [&](std::ostream& out) {
    motif::write_oracle_check(out, chk, {loaded.graph.num_vertices(), loaded.graph.num_edges()},
                              parse_format(cfg.format));
  });
  if (!chk.passed()) {
    std::fprintf(stderr, "oracle-check failed on %zu class(es):", chk.mismatches.size());
    for (auto id : chk.mismatches) std::fprintf(stderr, " %d", id);
    std::fprintf(stderr, "\n");
    return kExitMismatch;
  }
  std::fprintf(stderr, "oracle-check passed, oracle_seconds=%.6f\n", chk.oracle.seconds);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact census of connected induced 3-, 4- and 5-vertex subgraphs of a directed graph."};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("-k", cfg.k, "subgraph size")->check(CLI::IsMember({3, 4, 5}));
    sub->add_flag("--undirected", cfg.undirected, "census the undirected skeleton");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
    if (with_input) {
      sub->add_option("input", cfg.input, "edge-list file, '-' for stdin")->required();
      sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
      sub->add_flag("--keep-isolated", cfg.keep_isolated, "keep vertices without edges");
    }
  };

  auto* count = app.add_subcommand("count", "class histogram of one graph");
  common(count, true);
  auto* sig = app.add_subcommand("significance", "z-scores against degree-preserving random graphs");
  common(sig, true);
  sig->add_option("--seed", cfg.seed, "random seed");
  sig->add_option("--ensemble", cfg.ensemble, "random graphs per run (default 100/10/5 for k=3/4/5)");
  sig->add_option("--attempts", cfg.attempts, "switch attempts per edge");
  auto* classes = app.add_subcommand("classes", "list every connected class with its divisor");
  common(classes, false);
  auto* oracle = app.add_subcommand("oracle-check", "compare the census with brute-force enumeration");
  common(oracle, true);
  oracle->add_option("--budget", cfg.budget, "maximum subgraphs the oracle may enumerate");
  oracle->add_option("--fault-divisor", cfg.fault_divisors, "id:value divisor replacement")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*count) return cmd_count(cfg);
    if (*sig) return cmd_significance(cfg);
    if (*classes) return cmd_classes(cfg);
    return cmd_oracle_check(cfg);
  } catch (const motif::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const motif::EmptyGraphError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
}
