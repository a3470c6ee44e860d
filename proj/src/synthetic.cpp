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

#include "subseg/synthetic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "subseg/text.hpp"

namespace subseg::synthetic {

namespace {

constexpr std::size_t kVocabulary = 3000;

const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> vocab = [] {
    static const char* syllables[] = {"ka", "lo", "mi", "ne", "ra", "to", "su", "vi", "den", "bar",
                                      "qui", "sto", "pel", "an", "er", "ot", "ul", "ix", "mar", "fen",
                                      "go", "hu", "ja", "ze", "wo", "ly", "pra", "tre", "cho", "sha"};
    CounterRng rng(0x5EED);
    std::vector<std::string> out;
    out.reserve(kVocabulary);
    while (out.size() < kVocabulary) {
      // short words dominate the frequent end of the list
      const std::size_t n_syl = 1 + std::min<std::size_t>(rng.below(2) + out.size() * 3 / kVocabulary, 4);
      std::string w;
      for (std::size_t s = 0; s < n_syl; ++s) w += syllables[rng.below(std::size(syllables))];
      out.push_back(std::move(w));
    }
    return out;
  }();
  return vocab;
}

bool ends_with_punct(const std::string& w) {
  return !w.empty() && std::string_view(".,;:!?").find(w.back()) != std::string_view::npos;
}

bool ends_clause(const std::string& w) {
  return !w.empty() && std::string_view(".;:!?").find(w.back()) != std::string_view::npos;
}

}  // namespace

std::string random_sentence(CounterRng& rng, const SentenceShape& shape) {
  const auto& vocab = vocabulary();
  const std::size_t n = shape.min_words + rng.below(shape.max_words - shape.min_words + 1);
  std::vector<std::string> words;
  bool capital = true;
  for (std::size_t i = 0; i < n; ++i) {
    // rank ~ u^3 * V gives a heavy head
    const double u = static_cast<double>(rng.below(1u << 30)) / static_cast<double>(1u << 30);
    std::string w = vocab[static_cast<std::size_t>(u * u * u * kVocabulary)];
    if (w.size() > shape.max_word_chars) w.resize(shape.max_word_chars);
    if (capital) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
    capital = false;
    if (i + 1 == n) {
      w += rng.below(8) == 0 ? "?" : ".";
    } else if (w.size() < shape.max_word_chars) {
      const auto r = rng.below(100);
      if (r < 9) {
        w += ",";
      } else if (r < 12) {
        w += ".";
        capital = true;
      } else if (r < 13) {
        w += ";";
      }
    }
    words.push_back(std::move(w));
  }
  return join_words(words);
}

std::vector<std::string> random_sentences(std::size_t n, std::uint64_t seed, const SentenceShape& shape) {
  CounterRng rng(seed);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_sentence(rng, shape));
  return out;
}

AnnotatedSentence rule_segment(const std::vector<std::string>& words, const ConstraintProfile& profile) {
  std::vector<GapLabel> gaps(words.size(), GapLabel::None);
  std::size_t line = 0;
  GapLabel prev = GapLabel::Eob;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t len = char_count(words[i]);
    const std::size_t csb = line == 0 ? len : line + 1 + len;
    if (i + 1 == words.size()) {
      gaps[i] = GapLabel::Eob;
      break;
    }
    const bool overflow = csb + 1 + char_count(words[i + 1]) > profile.cpl_limit;
    const bool clause = ends_with_punct(words[i]) && csb >= 21;
    if (overflow || clause) {
      gaps[i] = prev == GapLabel::Eol || ends_clause(words[i]) ? GapLabel::Eob : GapLabel::Eol;
      prev = gaps[i];
      line = 0;
    } else {
      line = csb;
    }
  }
  return AnnotatedSentence(words, std::move(gaps));
}

std::vector<AnnotatedSentence> rule_corpus(std::size_t n, std::uint64_t seed,
                                           const ConstraintProfile& profile, const SentenceShape& shape) {
  std::vector<AnnotatedSentence> out;
  out.reserve(n);
  for (const auto& s : random_sentences(n, seed, shape)) out.push_back(rule_segment(split_words(s), profile));
  return out;
}

AnnotatedSentence collapse_eols(const AnnotatedSentence& s) {
  std::vector<GapLabel> gaps = s.gaps();
  std::replace(gaps.begin(), gaps.end(), GapLabel::Eol, GapLabel::None);
  return AnnotatedSentence(s.words(), std::move(gaps));
}

AnnotatedSentence random_strict(CounterRng& rng, const SentenceShape& shape) {
  auto words = split_words(random_sentence(rng, shape));
  std::vector<GapLabel> gaps(words.size(), GapLabel::None);
  bool eol_in_block = false;
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    const auto r = rng.below(10);
    if (r < 2 && !eol_in_block) {
      gaps[i] = GapLabel::Eol;
      eol_in_block = true;
    } else if (r < 4) {
      gaps[i] = GapLabel::Eob;
      eol_in_block = false;
    }
  }
  gaps.back() = GapLabel::Eob;
  return AnnotatedSentence(std::move(words), std::move(gaps));
}

}  // namespace subseg::synthetic
