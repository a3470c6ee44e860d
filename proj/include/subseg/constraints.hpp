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

#include "subseg/annotate.hpp"
#include "subseg/srt.hpp"

namespace subseg {

/// Numeric subtitling limits. Defaults follow common Latin-script practice:
/// 42 characters per line, 21 characters per second, two lines per block,
/// and blocks under five characters treated as orphans.
struct ConstraintProfile {
  std::size_t cpl_limit = 42;
  double cps_limit = 21.0;
  std::size_t max_lines_per_block = 2;
  std::size_t orphan_threshold = 5;

  /// Throws std::invalid_argument unless every limit is positive.
  void validate() const;

  /// Reads `key = value` lines (cpl_limit, cps_limit, max_lines_per_block,
  /// orphan_threshold). `#` starts a comment. Unknown keys are rejected.
  static ConstraintProfile parse(std::string_view text);

  friend bool operator==(const ConstraintProfile&, const ConstraintProfile&) = default;
};

struct CplCheck {
  std::vector<std::size_t> line_lengths;
  bool conforming = true;
};

/// Length of every line, in Unicode scalar values, excluding break symbols.
CplCheck check_cpl(const AnnotatedSentence& s, const ConstraintProfile& profile);

/// True iff every block (lines joined by a space) is at most `limit` chars.
bool check_block_cpl(const AnnotatedSentence& s, std::size_t limit);

struct CpsCheck {
  double cps = 0.0;
  bool conforming = true;
};

/// Reading speed over the whole sentence window. Throws NonPositiveDuration.
CpsCheck check_cps(const AnnotatedSentence& s, const SegmentDuration& window,
                   const ConstraintProfile& profile);

bool check_lines(const AnnotatedSentence& s, const ConstraintProfile& profile);

/// min/max line length per block; 1.0 for single-line blocks.
std::vector<double> line_balance(const AnnotatedSentence& s);

/// Blocks shorter than the orphan threshold.
std::size_t count_orphans(const AnnotatedSentence& s, const ConstraintProfile& profile);

struct ConformityReport {
  std::size_t total_sentences = 0;
  std::size_t conforming_sentences = 0;        // every line <= cpl_limit
  std::size_t block_conforming_sentences = 0;  // every block <= 2 * cpl_limit
  std::size_t total_lines = 0;
  std::size_t conforming_lines = 0;
  std::size_t sentences_with_eol = 0;
  std::vector<std::size_t> worst_line_length;  // per sentence

  double line_conformity() const noexcept;
  std::string to_json() const;
  std::string to_text() const;

  friend bool operator==(const ConformityReport&, const ConformityReport&) = default;
};

/// Per-sentence contribution to a ConformityReport.
ConformityReport sentence_conformity(const AnnotatedSentence& s, const ConstraintProfile& profile);

/// Adds the counts of `part` (and appends its worst lengths) to `into`.
void merge_into(ConformityReport& into, const ConformityReport& part);

}  // namespace subseg
