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
#include <string>
#include <string_view>
#include <vector>

#include "subseg/srt.hpp"

namespace subseg {

/// What follows a word: nothing, end of line, or end of block.
enum class GapLabel : std::uint8_t { None = 0, Eol = 1, Eob = 2 };

inline constexpr std::size_t kNumLabels = 3;
inline constexpr std::string_view kEolSymbol = "<eol>";
inline constexpr std::string_view kEobSymbol = "<eob>";

std::string_view label_name(GapLabel label) noexcept;

struct BreakPosition {
  std::size_t gap = 1;  // after the gap-th word, 1-based
  GapLabel kind = GapLabel::Eob;

  friend bool operator==(const BreakPosition&, const BreakPosition&) = default;
};

enum class Grammar { Lenient, Strict };

/// A sentence as words plus one label per inter-word gap. The label at
/// position i follows word i, so a break can never open a sentence and two
/// breaks can never be adjacent.
class AnnotatedSentence {
public:
  AnnotatedSentence() = default;
  AnnotatedSentence(std::vector<std::string> words, std::vector<GapLabel> gaps);

  /// Parses space-separated tokens with literal `<eol>`/`<eob>` symbols.
  /// Throws GrammarViolation on a leading or doubled break, or (strict)
  /// when the block grammar is not met.
  static AnnotatedSentence parse(std::string_view text, Grammar grammar = Grammar::Lenient);

  /// Plain text, no breaks.
  static AnnotatedSentence plain(std::string_view text);

  const std::vector<std::string>& words() const noexcept { return words_; }
  const std::vector<GapLabel>& gaps() const noexcept { return gaps_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  GapLabel gap(std::size_t i) const { return gaps_.at(i); }
  void set_gap(std::size_t i, GapLabel label) { gaps_.at(i) = label; }

  std::size_t break_count() const noexcept;
  std::size_t count(GapLabel label) const noexcept;
  bool has_eol() const noexcept { return count(GapLabel::Eol) > 0; }

  /// Final gap is EOB and no block holds more than one EOL.
  bool is_strict() const noexcept;

  std::string to_string() const;

  friend bool operator==(const AnnotatedSentence&, const AnnotatedSentence&) = default;

private:
  std::vector<std::string> words_;
  std::vector<GapLabel> gaps_;
};

/// Throws GrammarViolation naming the first offending gap if `s` is not strict.
void require_strict(const AnnotatedSentence& s);

/// Words joined by single spaces.
std::string strip_breaks(const AnnotatedSentence& s);

std::vector<BreakPosition> extract_breaks(const AnnotatedSentence& s);

/// Inverse of strip_breaks + extract_breaks. Throws InvalidGap for
/// out-of-range or non-increasing gaps, GrammarViolation in strict mode.
AnnotatedSentence apply_breaks(std::string_view text, const std::vector<BreakPosition>& breaks,
                               Grammar grammar = Grammar::Lenient);

/// A subtitle block as its lines, each line a word run.
using Line = std::vector<std::string>;
using Block = std::vector<Line>;

/// EOB-delimited blocks; words after the last EOB form a final block.
std::vector<Block> blocks_of(const AnnotatedSentence& s);

/// Every line of every block, in order, joined with single spaces.
std::vector<std::string> lines_of(const AnnotatedSentence& s);

struct LineSplit {
  std::vector<std::string> lines;
  bool warning = false;  // more than one interior double space was found
};

/// Splits a collapsed two-line subtitle at its first interior run of two
/// or more spaces. Further runs are kept verbatim and flagged.
LineSplit restore_eol_from_double_space(std::string_view line);

/// Lays a strict sentence out as cues over `window`, one cue per block,
/// with durations proportional to block character counts.
std::vector<Subtitle> render_srt(const AnnotatedSentence& s, const SegmentDuration& window,
                                 std::uint64_t start_index);

}  // namespace subseg
