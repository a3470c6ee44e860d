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

#include "subseg/batch.hpp"

#include <exception>

#include <omp.h>

#include "subseg/error.hpp"
#include "subseg/rng.hpp"

namespace subseg {

std::uint64_t sentence_seed(std::uint64_t seed, std::size_t index) noexcept {
  return CounterRng(seed).split(index).next();
}

namespace {

// Runs body(i) for i in [0, n) across threads. The first exception (lowest
// index) is rethrown after the loop so errors match the serial order.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct PairStats {
  BreakCounts counts;
  BleuStats with_breaks;
  BleuStats no_breaks;
  std::size_t lines = 0;
  std::size_t conforming = 0;
};

PairStats pair_stats(const SentencePair& pair, std::size_t index, const ConstraintProfile& profile) {
  const auto& [hyp, ref] = pair;
  if (hyp.words() != ref.words()) throw TextMismatch(index);
  PairStats st;
  st.counts = break_counts(hyp, ref);
  st.with_breaks = bleu_stats(tokens_with_breaks(hyp), tokens_with_breaks(ref));
  st.no_breaks = bleu_stats(hyp.words(), ref.words());
  for (auto len : check_cpl(hyp, profile).line_lengths) {
    ++st.lines;
    st.conforming += len <= profile.cpl_limit;
  }
  return st;
}

EvalReport assemble(const std::vector<PairStats>& parts) {
  BreakCounts counts;
  BleuStats with_breaks, no_breaks;
  EvalReport r;
  for (const auto& p : parts) {
    counts += p.counts;
    with_breaks += p.with_breaks;
    no_breaks += p.no_breaks;
    r.hyp_lines += p.lines;
    r.conforming_hyp_lines += p.conforming;
  }
  const BreakScore prf = score_from_counts(counts);
  r.precision = prf.precision;
  r.recall = prf.recall;
  r.f1 = prf.f1;
  r.counts = counts;
  if (!parts.empty()) {
    r.bleu_with_breaks = bleu_score(with_breaks);
    r.bleu_no_breaks = bleu_score(no_breaks);
  }
  r.cpl_conformity_pct =
      r.hyp_lines == 0 ? 100.0
                       : 100.0 * static_cast<double>(r.conforming_hyp_lines) / static_cast<double>(r.hyp_lines);
  return r;
}

ConformityReport reduce(const std::vector<ConformityReport>& parts) {
  ConformityReport total;
  for (const auto& p : parts) merge_into(total, p);
  return total;
}

}  // namespace

std::vector<AnnotatedSentence> segment_count_char_batch(const std::vector<std::string>& sentences,
                                                        const ConstraintProfile& profile,
                                                        std::uint64_t seed) {
  std::vector<AnnotatedSentence> out(sentences.size());
  parallel_for(sentences.size(), [&](std::size_t i) {
    out[i] = segment_count_char(sentences[i], profile, sentence_seed(seed, i));
  });
  return out;
}

std::vector<AnnotatedSentence> segment_learned_batch(const LinearSegmenterModel& model,
                                                     const std::vector<AnnotatedSentence>& inputs,
                                                     const ConstraintProfile& profile,
                                                     const DecodeOptions& options) {
  std::vector<AnnotatedSentence> out(inputs.size());
  parallel_for(inputs.size(),
               [&](std::size_t i) { out[i] = segment_learned(model, inputs[i], profile, options); });
  return out;
}

ConformityReport conformity_stats(const std::vector<AnnotatedSentence>& corpus,
                                  const ConstraintProfile& profile) {
  std::vector<ConformityReport> parts(corpus.size());
  parallel_for(corpus.size(), [&](std::size_t i) { parts[i] = sentence_conformity(corpus[i], profile); });
  return reduce(parts);
}

EvalReport evaluate(const std::vector<SentencePair>& pairs, const ConstraintProfile& profile) {
  std::vector<PairStats> parts(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) { parts[i] = pair_stats(pairs[i], i, profile); });
  return assemble(parts);
}

namespace serial {

std::vector<AnnotatedSentence> segment_count_char_batch(const std::vector<std::string>& sentences,
                                                        const ConstraintProfile& profile,
                                                        std::uint64_t seed) {
  std::vector<AnnotatedSentence> out;
  out.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i)
    out.push_back(segment_count_char(sentences[i], profile, sentence_seed(seed, i)));
  return out;
}

std::vector<AnnotatedSentence> segment_learned_batch(const LinearSegmenterModel& model,
                                                     const std::vector<AnnotatedSentence>& inputs,
                                                     const ConstraintProfile& profile,
                                                     const DecodeOptions& options) {
  std::vector<AnnotatedSentence> out;
  out.reserve(inputs.size());
  for (const auto& s : inputs) out.push_back(segment_learned(model, s, profile, options));
  return out;
}

ConformityReport conformity_stats(const std::vector<AnnotatedSentence>& corpus,
                                  const ConstraintProfile& profile) {
  ConformityReport total;
  for (const auto& s : corpus) merge_into(total, sentence_conformity(s, profile));
  return total;
}

EvalReport evaluate(const std::vector<SentencePair>& pairs, const ConstraintProfile& profile) {
  std::vector<PairStats> parts;
  parts.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) parts.push_back(pair_stats(pairs[i], i, profile));
  return assemble(parts);
}

}  // namespace serial

}  // namespace subseg
