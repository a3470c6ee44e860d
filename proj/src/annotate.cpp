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

#include "subseg/annotate.hpp"

#include <cmath>

#include "subseg/error.hpp"
#include "subseg/text.hpp"

namespace subseg {

std::string_view label_name(GapLabel label) noexcept {
  switch (label) {
    case GapLabel::Eol: return kEolSymbol;
    case GapLabel::Eob: return kEobSymbol;
    case GapLabel::None: break;
  }
  return "none";
}

AnnotatedSentence::AnnotatedSentence(std::vector<std::string> words, std::vector<GapLabel> gaps)
    : words_(std::move(words)), gaps_(std::move(gaps)) {
  if (gaps_.size() != words_.size())
    throw InvalidGap("gap labels must match the word count");
  for (const auto& w : words_) {
    if (w.empty() || w == kEolSymbol || w == kEobSymbol ||
        w.find_first_of(" \t\r\n") != std::string::npos)
      throw GrammarViolation("invalid word '" + w + "'");
  }
}

AnnotatedSentence AnnotatedSentence::parse(std::string_view text, Grammar grammar) {
  std::vector<std::string> words;
  std::vector<GapLabel> gaps;
  for (auto& token : split_words(text)) {
    GapLabel brk = GapLabel::None;
    if (token == kEolSymbol) brk = GapLabel::Eol;
    if (token == kEobSymbol) brk = GapLabel::Eob;
    if (brk == GapLabel::None) {
      words.push_back(std::move(token));
      gaps.push_back(GapLabel::None);
      continue;
    }
    if (words.empty()) throw GrammarViolation("sentence starts with " + token);
    if (gaps.back() != GapLabel::None) throw GrammarViolation("adjacent break symbols");
    gaps.back() = brk;
  }
  AnnotatedSentence s;
  s.words_ = std::move(words);
  s.gaps_ = std::move(gaps);
  if (grammar == Grammar::Strict) require_strict(s);
  return s;
}

AnnotatedSentence AnnotatedSentence::plain(std::string_view text) {
  auto words = split_words(text);
  std::vector<GapLabel> gaps(words.size(), GapLabel::None);
  return AnnotatedSentence(std::move(words), std::move(gaps));
}

std::size_t AnnotatedSentence::break_count() const noexcept {
  return gaps_.size() - count(GapLabel::None);
}

std::size_t AnnotatedSentence::count(GapLabel label) const noexcept {
  std::size_t n = 0;
  for (auto g : gaps_) n += g == label;
  return n;
}

namespace {

// Index of the first gap violating the strict grammar, or size() if none.
std::size_t first_violation(const std::vector<GapLabel>& gaps) {
  bool eol_in_block = false;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] == GapLabel::Eol) {
      if (eol_in_block) return i;
      eol_in_block = true;
    } else if (gaps[i] == GapLabel::Eob) {
      eol_in_block = false;
    }
  }
  if (gaps.empty() || gaps.back() != GapLabel::Eob) return gaps.size();
  return gaps.size() + 1;
}

}  // namespace

bool AnnotatedSentence::is_strict() const noexcept {
  return first_violation(gaps_) == gaps_.size() + 1;
}

void require_strict(const AnnotatedSentence& s) {
  const auto at = first_violation(s.gaps());
  if (at == s.size() + 1) return;
  if (at == s.size()) throw GrammarViolation("sentence does not end with <eob>");
  throw GrammarViolation("more than two lines in a block at gap " + std::to_string(at + 1));
}

std::string AnnotatedSentence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) out.push_back(' ');
    out += words_[i];
    if (gaps_[i] != GapLabel::None) {
      out.push_back(' ');
      out += label_name(gaps_[i]);
    }
  }
  return out;
}

std::string strip_breaks(const AnnotatedSentence& s) { return join_words(s.words()); }

std::vector<BreakPosition> extract_breaks(const AnnotatedSentence& s) {
  std::vector<BreakPosition> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.gap(i) != GapLabel::None) out.push_back({i + 1, s.gap(i)});
  return out;
}

AnnotatedSentence apply_breaks(std::string_view text, const std::vector<BreakPosition>& breaks,
                               Grammar grammar) {
  auto words = split_words(text);
  std::vector<GapLabel> gaps(words.size(), GapLabel::None);
  std::size_t last = 0;
  for (const auto& b : breaks) {
    if (b.gap < 1 || b.gap > words.size())
      throw InvalidGap("gap " + std::to_string(b.gap) + " outside 1.." +
                       std::to_string(words.size()));
    if (b.gap <= last) throw InvalidGap("gaps must be strictly increasing");
    if (b.kind == GapLabel::None) throw InvalidGap("break kind must be <eol> or <eob>");
    gaps[b.gap - 1] = b.kind;
    last = b.gap;
  }
  AnnotatedSentence s(std::move(words), std::move(gaps));
  if (grammar == Grammar::Strict) require_strict(s);
  return s;
}

std::vector<Block> blocks_of(const AnnotatedSentence& s) {
  std::vector<Block> blocks;
  Block block;
  Line line;
  for (std::size_t i = 0; i < s.size(); ++i) {
    line.push_back(s.words()[i]);
    const GapLabel g = s.gap(i);
    if (g == GapLabel::None) continue;
    block.push_back(std::move(line));
    line.clear();
    if (g == GapLabel::Eob) {
      blocks.push_back(std::move(block));
      block.clear();
    }
  }
  if (!line.empty()) block.push_back(std::move(line));
  if (!block.empty()) blocks.push_back(std::move(block));
  return blocks;
}

std::vector<std::string> lines_of(const AnnotatedSentence& s) {
  std::vector<std::string> out;
  for (const auto& block : blocks_of(s))
    for (const auto& line : block) out.push_back(join_words(line));
  return out;
}

LineSplit restore_eol_from_double_space(std::string_view line) {
  LineSplit out;
  // Leading and trailing runs would produce an empty line; only interior runs split.
  std::size_t lead = 0;
  while (lead < line.size() && line[lead] == ' ') ++lead;
  const std::size_t pos = line.find("  ", lead);
  if (pos != std::string_view::npos) {
    std::size_t run_end = pos;
    while (run_end < line.size() && line[run_end] == ' ') ++run_end;
    if (run_end < line.size()) {
      const std::string_view second = line.substr(run_end);
      out.lines.emplace_back(line.substr(0, pos));
      out.lines.emplace_back(second);
      out.warning = trim(second).find("  ") != std::string_view::npos;
      return out;
    }
  }
  out.lines.emplace_back(line);
  return out;
}

std::vector<Subtitle> render_srt(const AnnotatedSentence& s, const SegmentDuration& window,
                                 std::uint64_t start_index) {
  require_strict(s);
  if (!(window.duration > 0)) throw NonPositiveDuration("window duration must be positive");
  const auto blocks = blocks_of(s);

  std::vector<std::size_t> chars;
  std::size_t total_chars = 0;
  for (const auto& block : blocks) {
    std::vector<std::string> texts;
    for (const auto& line : block) texts.push_back(join_words(line));
    chars.push_back(char_count(join_words(texts)));
    total_chars += chars.back();
  }

  const auto begin = static_cast<std::int64_t>(std::llround(window.offset * 1000.0));
  const auto span = static_cast<std::int64_t>(std::llround(window.duration * 1000.0));
  const auto n = static_cast<std::int64_t>(blocks.size());
  if (span < n) throw NonPositiveDuration("window too short for one millisecond per cue");

  std::vector<Subtitle> cues;
  std::int64_t prev = begin;
  std::size_t cumulative = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    cumulative += chars[k];
    std::int64_t boundary = begin + static_cast<std::int64_t>(std::llround(
                                        static_cast<double>(span) * static_cast<double>(cumulative) /
                                        static_cast<double>(total_chars)));
    const auto remaining = n - static_cast<std::int64_t>(k) - 1;
    boundary = std::max(boundary, prev + 1);
    boundary = std::min(boundary, begin + span - remaining);
    if (k + 1 == blocks.size()) boundary = begin + span;

    Subtitle cue;
    cue.index = start_index + k;
    cue.start = Timestamp{prev};
    cue.end = Timestamp{boundary};
    for (const auto& line : blocks[k]) cue.lines.push_back(join_words(line));
    cues.push_back(std::move(cue));
    prev = boundary;
  }
  return cues;
}

}  // namespace subseg
