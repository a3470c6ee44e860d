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

// Corpus-level kernels. The functions in `subseg` run sentence-parallel
// with OpenMP and assemble results in input order; the `subseg::serial`
// versions are straight loops kept as the reference the parallel ones are
// tested and benchmarked against. Both produce identical results.

#include <cstdint>
#include <string>
#include <vector>

#include "subseg/annotate.hpp"
#include "subseg/constraints.hpp"
#include "subseg/eval.hpp"
#include "subseg/segmenters.hpp"

namespace subseg {

/// Seed used for sentence `index` of a batch seeded with `seed`.
std::uint64_t sentence_seed(std::uint64_t seed, std::size_t index) noexcept;

std::vector<AnnotatedSentence> segment_count_char_batch(const std::vector<std::string>& sentences,
                                                        const ConstraintProfile& profile,
                                                        std::uint64_t seed);

std::vector<AnnotatedSentence> segment_learned_batch(const LinearSegmenterModel& model,
                                                     const std::vector<AnnotatedSentence>& inputs,
                                                     const ConstraintProfile& profile,
                                                     const DecodeOptions& options = {});

ConformityReport conformity_stats(const std::vector<AnnotatedSentence>& corpus,
                                  const ConstraintProfile& profile);

/// Break P/R/F1, corpus BLEU with and without breaks, and the share of
/// hypothesis lines within the CPL limit. Throws TextMismatch.
EvalReport evaluate(const std::vector<SentencePair>& pairs, const ConstraintProfile& profile);

namespace serial {

std::vector<AnnotatedSentence> segment_count_char_batch(const std::vector<std::string>& sentences,
                                                        const ConstraintProfile& profile,
                                                        std::uint64_t seed);

std::vector<AnnotatedSentence> segment_learned_batch(const LinearSegmenterModel& model,
                                                     const std::vector<AnnotatedSentence>& inputs,
                                                     const ConstraintProfile& profile,
                                                     const DecodeOptions& options = {});

ConformityReport conformity_stats(const std::vector<AnnotatedSentence>& corpus,
                                  const ConstraintProfile& profile);

EvalReport evaluate(const std::vector<SentencePair>& pairs, const ConstraintProfile& profile);

}  // namespace serial

}  // namespace subseg
