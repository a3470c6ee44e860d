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
#include <string>
#include <string_view>
#include <vector>

namespace subseg {

/// Number of Unicode scalar values in a UTF-8 string. Continuation bytes
/// are skipped, so malformed input still yields a bounded count.
std::size_t char_count(std::string_view utf8) noexcept;

/// Collapse runs of blanks to one space and trim both ends.
std::string normalize_whitespace(std::string_view text);

/// Split on blank runs; never yields empty words.
std::vector<std::string> split_words(std::string_view text);

std::string join_words(const std::vector<std::string>& words, std::string_view sep = " ");

bool is_blank(char c) noexcept;

std::string_view trim_right(std::string_view text) noexcept;
std::string_view trim(std::string_view text) noexcept;

}  // namespace subseg
