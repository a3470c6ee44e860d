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

#include "subseg/constraints.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "subseg/error.hpp"
#include "subseg/text.hpp"

namespace subseg {

void ConstraintProfile::validate() const {
  if (cpl_limit == 0 || !(cps_limit > 0) || max_lines_per_block == 0 || orphan_threshold == 0)
    throw std::invalid_argument("constraint limits must be positive");
}

ConstraintProfile ConstraintProfile::parse(std::string_view text) {
  ConstraintProfile p;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("profile line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    auto read = [&](auto& field) {
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), field);
      if (ec != std::errc() || ptr != value.data() + value.size())
        throw std::invalid_argument("profile line " + std::to_string(line_no) + ": bad value for " + key);
    };
    if (key == "cpl_limit") read(p.cpl_limit);
    else if (key == "cps_limit") read(p.cps_limit);
    else if (key == "max_lines_per_block") read(p.max_lines_per_block);
    else if (key == "orphan_threshold") read(p.orphan_threshold);
    else throw std::invalid_argument("profile line " + std::to_string(line_no) + ": unknown key " + key);
  }
  p.validate();
  return p;
}

CplCheck check_cpl(const AnnotatedSentence& s, const ConstraintProfile& profile) {
  CplCheck out;
  for (const auto& line : lines_of(s)) {
    out.line_lengths.push_back(char_count(line));
    if (out.line_lengths.back() > profile.cpl_limit) out.conforming = false;
  }
  return out;
}

namespace {

std::size_t block_chars(const Block& block) {
  std::size_t n = 0;
  for (const auto& line : block)
    for (const auto& w : line) n += char_count(w) + 1;
  return n == 0 ? 0 : n - 1;
}

}  // namespace

bool check_block_cpl(const AnnotatedSentence& s, std::size_t limit) {
  for (const auto& block : blocks_of(s))
    if (block_chars(block) > limit) return false;
  return true;
}

CpsCheck check_cps(const AnnotatedSentence& s, const SegmentDuration& window,
                   const ConstraintProfile& profile) {
  if (!(window.duration > 0)) throw NonPositiveDuration("sentence window must have positive duration");
  CpsCheck out;
  out.cps = static_cast<double>(char_count(strip_breaks(s))) / window.duration;
  out.conforming = out.cps <= profile.cps_limit;
  return out;
}

bool check_lines(const AnnotatedSentence& s, const ConstraintProfile& profile) {
  for (const auto& block : blocks_of(s))
    if (block.size() > profile.max_lines_per_block) return false;
  return true;
}

std::vector<double> line_balance(const AnnotatedSentence& s) {
  std::vector<double> out;
  for (const auto& block : blocks_of(s)) {
    if (block.size() < 2) {
      out.push_back(1.0);
      continue;
    }
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& line : block) {
      const auto n = char_count(join_words(line));
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    out.push_back(hi == 0 ? 1.0 : static_cast<double>(lo) / static_cast<double>(hi));
  }
  return out;
}

std::size_t count_orphans(const AnnotatedSentence& s, const ConstraintProfile& profile) {
  std::size_t n = 0;
  for (const auto& block : blocks_of(s)) n += block_chars(block) < profile.orphan_threshold;
  return n;
}

double ConformityReport::line_conformity() const noexcept {
  return total_lines == 0 ? 1.0
                          : static_cast<double>(conforming_lines) / static_cast<double>(total_lines);
}

std::string ConformityReport::to_json() const {
  nlohmann::ordered_json j;
  j["totals"] = {{"sentences", total_sentences}, {"lines", total_lines}};
  j["conforming_42"] = {{"sentences", conforming_sentences}, {"lines", conforming_lines}};
  j["conforming_84"] = {{"sentences", block_conforming_sentences}};
  j["with_eol"] = sentences_with_eol;
  return j.dump(2);
}

std::string ConformityReport::to_text() const {
  std::ostringstream os;
  os << "total_sentences\t" << total_sentences << '\n'
     << "conforming_sentences\t" << conforming_sentences << '\n'
     << "block_conforming_sentences\t" << block_conforming_sentences << '\n'
     << "total_lines\t" << total_lines << '\n'
     << "conforming_lines\t" << conforming_lines << '\n'
     << "sentences_with_eol\t" << sentences_with_eol << '\n';
  return os.str();
}

ConformityReport sentence_conformity(const AnnotatedSentence& s, const ConstraintProfile& profile) {
  ConformityReport r;
  r.total_sentences = 1;
  const auto cpl = check_cpl(s, profile);
  r.conforming_sentences = cpl.conforming;
  r.block_conforming_sentences = check_block_cpl(s, 2 * profile.cpl_limit);
  r.total_lines = cpl.line_lengths.size();
  for (auto n : cpl.line_lengths) r.conforming_lines += n <= profile.cpl_limit;
  r.sentences_with_eol = s.has_eol();
  r.worst_line_length.push_back(
      cpl.line_lengths.empty() ? 0 : *std::max_element(cpl.line_lengths.begin(), cpl.line_lengths.end()));
  return r;
}

void merge_into(ConformityReport& into, const ConformityReport& part) {
  into.total_sentences += part.total_sentences;
  into.conforming_sentences += part.conforming_sentences;
  into.block_conforming_sentences += part.block_conforming_sentences;
  into.total_lines += part.total_lines;
  into.conforming_lines += part.conforming_lines;
  into.sentences_with_eol += part.sentences_with_eol;
  into.worst_line_length.insert(into.worst_line_length.end(), part.worst_line_length.begin(),
                                part.worst_line_length.end());
}

}  // namespace subseg
