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
#include <limits>
#include <string>

#include "motifcensus/error.hpp"

namespace motif {

using u128 = unsigned __int128;

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit counter overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit counter overflow in multiplication");
  return r;
}

inline std::uint64_t checked_narrow(u128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw OverflowError("128-bit intermediate does not fit a 64-bit counter");
  return static_cast<std::uint64_t>(v);
}

/// a - b where a frequency can never go negative; `what` names the term.
inline u128 nonnegative_sub(u128 a, u128 b, const char* what) {
  if (b > a) throw InternalError(std::string("negative intermediate frequency: ") + what);
  return a - b;
}

inline std::uint64_t choose2(std::uint64_t n) {
  return n < 2 ? 0 : checked_narrow(static_cast<u128>(n) * (n - 1) / 2);
}

}  // namespace motif
