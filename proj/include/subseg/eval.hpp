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

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "subseg/annotate.hpp"
#include "subseg/constraints.hpp"

namespace subseg {

struct BreakCounts {
  std::size_t correct = 0;
  std::size_t hyp = 0;
  std::size_t ref = 0;

  BreakCounts& operator+=(const BreakCounts& o) noexcept {
    correct += o.correct;
    hyp += o.hyp;
    ref += o.ref;
    return *this;
  }
  friend bool operator==(const BreakCounts&, const BreakCounts&) = default;
};

struct BreakScore {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  BreakCounts counts;
};

/// Precision, recall and F1 from counts. A side with no breaks scores 1
/// when the other side has none either, otherwise 0.
BreakScore score_from_counts(const BreakCounts& counts);

/// Break counts of one pair: a hypothesis break is correct when the
/// reference has a break of the same kind after the same word. Throws
/// TextMismatch (sentence 0) when the words differ.
BreakCounts break_counts(const AnnotatedSentence& hyp, const AnnotatedSentence& ref);

BreakScore break_prf(const AnnotatedSentence& hyp, const AnnotatedSentence& ref);

using SentencePair = std::pair<AnnotatedSentence, AnnotatedSentence>;  // (hyp, ref)

/// Micro-averaged over the corpus.
BreakScore corpus_prf(const std::vector<SentencePair>& pairs);

/// Clipped n-gram matches and candidate counts for n = 1..4, plus lengths.
struct BleuStats {
  std::array<std::size_t, 4> matches{};
  std::array<std::size_t, 4> totals{};
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;

  BleuStats& operator+=(const BleuStats& o) noexcept;
  friend bool operator==(const BleuStats&, const BleuStats&) = default;
};

BleuStats bleu_stats(const std::vector<std::string>& hyp, const std::vector<std::string>& ref);

/// 4-gram BLEU in [0, 100]: brevity penalty, unigram precision as is, and
/// add-one smoothing on the 2- to 4-gram precisions.
double bleu_score(const BleuStats& stats);

double bleu(const std::vector<std::string>& hyp, const std::vector<std::string>& ref);

/// Words plus literal break symbols.
std::vector<std::string> tokens_with_breaks(const AnnotatedSentence& s);

struct EvalReport {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  double bleu_with_breaks = 100.0;
  double bleu_no_breaks = 100.0;
  double cpl_conformity_pct = 100.0;  // hypothesis lines within cpl_limit
  BreakCounts counts;
  std::size_t hyp_lines = 0;
  std::size_t conforming_hyp_lines = 0;

  std::string to_json() const;
  std::string to_table() const;
};

}  // namespace subseg
