/*
 * Copyright 2026 The subseg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace subseg {

/// Counter-based generator: the i-th draw is a pure function of (key, i),
/// so streams can be split per sentence without sharing state.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) noexcept : key_(mix(seed)) {}

  std::uint64_t next() noexcept { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  /// Uniform in [0, bound). bound must be non-zero.
  std::uint64_t below(std::uint64_t bound) noexcept;

  bool coin() noexcept { return (next() >> 63) != 0; }

  /// Independent stream for sub-task `id`.
  CounterRng split(std::uint64_t id) const noexcept {
    return CounterRng(key_ ^ mix(id + 0x632BE59BD9B4E019ULL));
  }

  /// Fisher-Yates with this generator; identical on every platform.
  template <class T>
  void shuffle(std::vector<T>& v) noexcept {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace subseg
