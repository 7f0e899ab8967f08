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
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace motif {

/// Runs body(state, job) for job in [0, jobs) on `workers` threads, each
/// owning one State from make_state(). Jobs are handed out in fixed-size
/// chunks from a shared cursor. After all threads join, merge(state) is
/// called for each worker in worker order. The first exception thrown by
/// any job is rethrown on the calling thread.
template <class MakeState, class Body, class Merge>
void parallel_jobs(std::size_t jobs, unsigned workers, MakeState make_state, Body body, Merge merge,
                   std::size_t chunk = 16) {
  workers = std::max(1u, workers);
  if (workers == 1 || jobs <= chunk) {
    auto state = make_state();
    for (std::size_t j = 0; j < jobs; ++j) body(state, j);
    merge(state);
    return;
  }

  using State = decltype(make_state());
  std::vector<State> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(make_state());

  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;

  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          while (!failed.load(std::memory_order_relaxed)) {
            std::size_t begin = cursor.fetch_add(chunk, std::memory_order_relaxed);
            if (begin >= jobs) break;
            std::size_t end = std::min(jobs, begin + chunk);
            for (std::size_t j = begin; j < end; ++j) body(states[w], j);
          }
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          failed = true;
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  for (auto& s : states) merge(s);
}

}  // namespace motif
