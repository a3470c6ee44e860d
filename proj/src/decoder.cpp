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

#include <algorithm>
#include <map>

#include "feature_parts.hpp"
#include "search.hpp"
#include "subseg/segmenters.hpp"
#include "subseg/text.hpp"

namespace subseg {

namespace {

constexpr std::uint8_t bit(GapLabel g) { return static_cast<std::uint8_t>(1u << static_cast<int>(g)); }
constexpr std::uint8_t kAll = bit(GapLabel::None) | bit(GapLabel::Eol) | bit(GapLabel::Eob);
constexpr std::array<GapLabel, kNumLabels> kLabels = {GapLabel::None, GapLabel::Eol, GapLabel::Eob};

struct Hyp {
  double score;
  std::size_t line;  // chars on the current line before this gap's word
  GapLabel prev;     // last break so far (Eob at sentence start)
  std::int64_t parent;
  GapLabel label;
  bool gold;  // agrees with the gold prefix, during training
};

struct Scorer {
  const LinearSegmenterModel& model;
  const std::vector<std::string>& words;
  const ConstraintProfile& profile;
  std::vector<std::string> buffer;

  LabelWeights static_part(std::size_t gap) {
    buffer.clear();
    detail::static_features(words, gap, buffer);
    return model.score(buffer);
  }
  LabelWeights state_part(std::size_t gap, std::size_t csb, GapLabel prev) {
    buffer.clear();
    detail::state_features(words, gap, csb, prev, profile, buffer);
    return model.score(buffer);
  }
};

std::uint8_t grammar_mask(std::uint8_t mask, GapLabel prev) {
  if (prev == GapLabel::Eol) mask &= static_cast<std::uint8_t>(~bit(GapLabel::Eol));
  return mask == 0 ? bit(GapLabel::Eob) : mask;
}

}  // namespace

std::vector<std::uint8_t> gap_masks(const AnnotatedSentence& input, SegmentMode mode) {
  std::vector<std::uint8_t> masks(input.size(), kAll);
  for (std::size_t i = 0; i < input.size(); ++i) {
    const GapLabel g = input.gap(i);
    if (g != GapLabel::None)
      masks[i] = bit(g);
    else if (mode == SegmentMode::EolOnly)
      masks[i] = bit(GapLabel::None) | bit(GapLabel::Eol);
  }
  if (!masks.empty()) masks.back() = bit(GapLabel::Eob);
  return masks;
}

namespace detail {

SearchResult beam_search(const LinearSegmenterModel& model, const std::vector<std::string>& words,
                         const std::vector<std::uint8_t>& masks, const ConstraintProfile& profile,
                         std::size_t beam_width, const std::vector<GapLabel>* gold, std::size_t start) {
  const std::size_t n = words.size();
  SearchResult result;
  if (n == 0) return result;

  Scorer scorer{model, words, profile, {}};
  std::vector<std::vector<Hyp>> steps(n + 1);
  std::size_t line = 0;
  GapLabel prev = GapLabel::Eob;
  for (std::size_t i = 0; i < start; ++i) {
    const GapLabel g = (*gold)[i];
    line = g != GapLabel::None ? 0 : line == 0 ? char_count(words[i]) : line + 1 + char_count(words[i]);
    if (g != GapLabel::None) prev = g;
  }
  steps[start].push_back({0.0, line, prev, -1, GapLabel::None, true});

  auto backtrack = [&](std::size_t len) {
    result.labels.assign(len, GapLabel::None);
    std::copy(gold ? gold->begin() : result.labels.begin(),
              gold ? gold->begin() + static_cast<std::ptrdiff_t>(start) : result.labels.begin(),
              result.labels.begin());
    std::int64_t at = 0;
    for (std::size_t i = len; i > start; --i) {
      const Hyp& hyp = steps[i][static_cast<std::size_t>(at)];
      result.labels[i - 1] = hyp.label;
      at = hyp.parent;
    }
    result.score = steps[len].front().score;
  };

  for (std::size_t i = start; i < n; ++i) {
    const std::size_t len = char_count(words[i]);
    const LabelWeights fixed = scorer.static_part(i + 1);
    // keyed by (line length, previous break) so equal futures recombine
    std::map<std::pair<std::size_t, int>, Hyp> next;
    const auto& beam = steps[i];
    // a word over the limit gets a line of its own when the frozen labels
    // leave room for one; training follows the gold labels instead
    const bool isolate = !gold && (len > profile.cpl_limit ||
                                   (i + 1 < n && char_count(words[i + 1]) > profile.cpl_limit));
    const bool fresh_line =
        std::any_of(beam.begin(), beam.end(), [](const Hyp& h) { return h.line == 0; });
    for (std::size_t h = 0; h < beam.size(); ++h) {
      const Hyp& hyp = beam[h];
      if (isolate && len > profile.cpl_limit && fresh_line && hyp.line != 0) continue;
      const std::size_t csb = hyp.line == 0 ? len : hyp.line + 1 + len;
      const LabelWeights dyn = scorer.state_part(i + 1, csb, hyp.prev);
      std::uint8_t allowed = grammar_mask(masks[i], hyp.prev);
      if (isolate && (allowed & ~bit(GapLabel::None))) allowed &= static_cast<std::uint8_t>(~bit(GapLabel::None));
      for (GapLabel label : kLabels) {
        if (!(allowed & bit(label))) continue;
        const auto k = static_cast<std::size_t>(label);
        Hyp cand{hyp.score + (fixed[k] + dyn[k]),
                 label == GapLabel::None ? csb : 0,
                 label == GapLabel::None ? hyp.prev : label,
                 static_cast<std::int64_t>(h),
                 label,
                 hyp.gold && gold && (*gold)[i] == label};
        const auto key = std::make_pair(cand.line, static_cast<int>(cand.prev));
        auto [it, inserted] = next.try_emplace(key, cand);
        if (!inserted && cand.score > it->second.score) it->second = cand;
      }
    }
    auto& out = steps[i + 1];
    out.reserve(next.size());
    for (auto& [key, hyp] : next) out.push_back(hyp);
    // std::map order makes ties deterministic under the stable sort
    std::stable_sort(out.begin(), out.end(),
                     [](const Hyp& a, const Hyp& b) { return a.score > b.score; });
    if (beam_width > 0 && out.size() > beam_width) out.resize(beam_width);

    if (gold && std::none_of(out.begin(), out.end(), [](const Hyp& h) { return h.gold; })) {
      result.early_stop = i + 1;
      backtrack(i + 1);
      return result;
    }
  }
  backtrack(n);
  return result;
}

}  // namespace detail

Decoded decode(const LinearSegmenterModel& model, const AnnotatedSentence& input,
               const ConstraintProfile& profile, const DecodeOptions& options) {
  if (input.empty()) return {input, 0.0};
  auto found = detail::beam_search(model, input.words(), gap_masks(input, options.mode), profile,
                                   options.beam);
  return {AnnotatedSentence(input.words(), std::move(found.labels)), found.score};
}

AnnotatedSentence segment_learned(const LinearSegmenterModel& model, const AnnotatedSentence& input,
                                  const ConstraintProfile& profile, const DecodeOptions& options) {
  if (options.mode == SegmentMode::Full && input.is_strict()) return input;
  return decode(model, input, profile, options).sentence;
}

double score_labels(const LinearSegmenterModel& model, const std::vector<std::string>& words,
                    const std::vector<GapLabel>& labels, const ConstraintProfile& profile) {
  Scorer scorer{model, words, profile, {}};
  double total = 0.0;
  std::size_t line = 0;
  GapLabel prev = GapLabel::Eob;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t csb = line == 0 ? char_count(words[i]) : line + 1 + char_count(words[i]);
    const auto k = static_cast<std::size_t>(labels[i]);
    total += scorer.static_part(i + 1)[k] + scorer.state_part(i + 1, csb, prev)[k];
    if (labels[i] == GapLabel::None) {
      line = csb;
    } else {
      line = 0;
      prev = labels[i];
    }
  }
  return total;
}

}  // namespace subseg
