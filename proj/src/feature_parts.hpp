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

#include <string>
#include <vector>

#include "subseg/segmenters.hpp"

namespace subseg::detail {

/// Features of a gap that do not depend on earlier decisions.
void static_features(const std::vector<std::string>& words, std::size_t gap,
                     std::vector<std::string>& out);

/// Features of a gap that depend on the current line state.
void state_features(const std::vector<std::string>& words, std::size_t gap,
                    std::size_t chars_since_break, GapLabel prev_break,
                    const ConstraintProfile& profile, std::vector<std::string>& out);

/// Chars of the words after `gap`, joined with spaces.
std::size_t chars_after(const std::vector<std::string>& words, std::size_t gap);

}  // namespace subseg::detail
