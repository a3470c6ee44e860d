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

#include <cstdint>
#include <string>
#include <vector>

#include "subseg/segmenters.hpp"

namespace subseg::detail {

struct SearchResult {
  std::vector<GapLabel> labels;  // best hypothesis, possibly a prefix
  double score = 0.0;
  // Number of gaps decided when the gold prefix left the beam; 0 if it
  // never did (or no gold sequence was given).
  std::size_t early_stop = 0;
};

/// Constrained beam search over gap labels. With `gold`, stops as soon as
/// no hypothesis in the beam agrees with the gold prefix and returns the
/// best prefix of that length. A non-zero `start` resumes from the first
/// `start` gold labels, which are copied into the result.
SearchResult beam_search(const LinearSegmenterModel& model, const std::vector<std::string>& words,
                         const std::vector<std::uint8_t>& masks, const ConstraintProfile& profile,
                         std::size_t beam, const std::vector<GapLabel>* gold = nullptr,
                         std::size_t start = 0);

}  // namespace subseg::detail
