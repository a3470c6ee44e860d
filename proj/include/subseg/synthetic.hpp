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

// Deterministic synthetic corpora for tests, benchmarks and the
// acceptance suite. Gold segmentations follow a fixed rule that mixes a
// length cue (the next word would overflow the line) with a punctuation
// cue (a line of 21+ characters ending in punctuation).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "subseg/annotate.hpp"
#include "subseg/constraints.hpp"
#include "subseg/rng.hpp"

namespace subseg::synthetic {

struct SentenceShape {
  std::size_t min_words = 4;
  std::size_t max_words = 40;
  std::size_t max_word_chars = 12;
};

/// Plain sentence over a fixed pseudo-word vocabulary with Zipf-like
/// frequencies and occasional punctuation.
std::string random_sentence(CounterRng& rng, const SentenceShape& shape = {});

std::vector<std::string> random_sentences(std::size_t n, std::uint64_t seed,
                                          const SentenceShape& shape = {});

/// Gold segmentation of `words` under the hidden rule.
AnnotatedSentence rule_segment(const std::vector<std::string>& words, const ConstraintProfile& profile);

std::vector<AnnotatedSentence> rule_corpus(std::size_t n, std::uint64_t seed,
                                           const ConstraintProfile& profile,
                                           const SentenceShape& shape = {});

/// Removes every <eol>, merging the two lines of each block.
AnnotatedSentence collapse_eols(const AnnotatedSentence& s);

/// Random strict labelling of a random sentence, for property tests.
AnnotatedSentence random_strict(CounterRng& rng, const SentenceShape& shape = {});

}  // namespace subseg::synthetic
