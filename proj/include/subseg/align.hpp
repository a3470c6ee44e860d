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
#include <unordered_map>
#include <vector>

#include "subseg/annotate.hpp"
#include "subseg/srt.hpp"

namespace subseg {

/// Subtitles of many talks, searchable by talk id and by the first word of
/// each cue. Built once; safe for concurrent reads afterwards.
class InvertedIndex {
public:
  struct Entry {
    Subtitle cue;
    std::vector<std::string> lines;  // whitespace-normalized, for matching only
    std::string key;                 // lines joined with single spaces
  };

  InvertedIndex() = default;
  explicit InvertedIndex(const std::vector<SubtitleDocument>& docs);

  /// Cues of a talk in index order; empty when the talk is unknown.
  const std::vector<Entry>& talk(const std::string& talk_id) const;

  /// Positions (into talk()) of cues whose first word is `word`.
  const std::vector<std::size_t>& starting_with(const std::string& talk_id,
                                                const std::string& word) const;

  std::size_t size() const noexcept { return size_; }
  std::size_t talk_count() const noexcept { return talks_.size(); }

private:
  struct Talk {
    std::vector<Entry> entries;
    std::unordered_map<std::string, std::vector<std::size_t>> by_first_word;
  };
  std::unordered_map<std::string, Talk> talks_;
  std::size_t size_ = 0;
};

/// Throws DuplicateTalkId when two documents share a talk id.
InvertedIndex build_index(const std::vector<SubtitleDocument>& docs);

/// Rebuilds `sentence` from fully contained cues of `talk_id`, tiled left
/// to right in index order (leftmost cue first on ties). Cue boundaries
/// become <eob>, line boundaries inside a cue become <eol>. Throws
/// NoAlignment if no tiling reproduces the normalized sentence exactly.
AnnotatedSentence align_sentence(std::string_view sentence, const std::string& talk_id,
                                 const InvertedIndex& index);

}  // namespace subseg
