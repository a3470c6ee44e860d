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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subseg/annotate.hpp"
#include "subseg/constraints.hpp"
#include "subseg/segmenters.hpp"
#include "subseg/srt.hpp"

namespace subseg {

// ---------------------------------------------------------------------------
// Corpus construction

struct TalkSentence {
  std::string talk_id;
  std::string text;
};

struct AlignmentFailure {
  std::size_t sentence;  // 0-based position in the input list
  std::string talk_id;
  std::string reason;
};

struct CorpusBuild {
  std::vector<AnnotatedSentence> corpus;
  std::vector<std::size_t> source;  // input position of each corpus sentence
  std::vector<AlignmentFailure> failures;
  std::vector<std::string> warnings;
};

/// Splits collapsed single-line cues at their double space, indexes the
/// documents and aligns every sentence against its talk. Failures are
/// collected, not thrown.
CorpusBuild build_corpus(std::vector<SubtitleDocument> docs, const std::vector<TalkSentence>& sentences);

/// Every *.srt under `dir`, talk id = file stem, sorted by file name.
/// Throws Error for unreadable files; parse warnings land in `warnings`.
std::vector<SubtitleDocument> load_srt_dir(const std::filesystem::path& dir,
                                           std::vector<std::string>* warnings = nullptr);

/// `talk_id<TAB>sentence` lines.
std::vector<TalkSentence> parse_talk_sentences(std::string_view text);

/// Plain sentences paired 1:1 with metadata entries; the talk id is the
/// audio file stem (`ted_1096.wav` -> `ted_1096`).
std::vector<TalkSentence> pair_with_metadata(const std::vector<std::string>& sentences,
                                             const std::vector<SegmentDuration>& metadata);

// ---------------------------------------------------------------------------
// Iterative re-annotation

struct ReannotateConfig {
  std::size_t iterations = 1;
  TrainingConfig fine_tune = TrainingConfig::fine_tune_defaults();
  std::size_t beam = 4;
};

struct IterationReport {
  std::size_t iteration = 0;
  std::size_t reannotated = 0;  // sentences with a line over the limit
  std::size_t accepted = 0;
  double conformity_before = 0.0;  // fraction of lines within cpl_limit
  double conformity_after = 0.0;
  std::size_t pool_size = 0;  // fine-tuning pool after this iteration
  bool base_restart = true;   // fine-tuned from the base model, not warm-started
};

struct Reannotation {
  std::vector<AnnotatedSentence> corpus;
  LinearSegmenterModel model;
  std::vector<IterationReport> reports;
};

/// True for an output the loop may keep: every line within the limit, at
/// least one <eol>, and never two <eol>s in one block.
bool accept_reannotation(const AnnotatedSentence& s, const ConstraintProfile& profile);

/// Each iteration segments the over-long sentences in <eol>-only mode with
/// the current model, keeps outputs passing accept_reannotation, adds them
/// to the pool of <eol> sentences (seeded with the corpus sentences that
/// already have one) and fine-tunes `base` on the pool. Stops early when an
/// iteration accepts nothing.
Reannotation reannotate(std::vector<AnnotatedSentence> corpus, const LinearSegmenterModel& base,
                        const LinearSegmenterModel& tuned, const ConstraintProfile& profile,
                        const ReannotateConfig& config);

// ---------------------------------------------------------------------------
// Statistics

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t words = 0;  // break symbols excluded
  ConformityReport conformity;
  double eol_fraction = 0.0;
  std::optional<double> total_duration;  // seconds, when metadata is given
  std::optional<double> mean_cps;

  std::string to_json() const;
  std::string to_text() const;
};

CorpusStats stats(const std::vector<AnnotatedSentence>& corpus, const ConstraintProfile& profile,
                  const std::vector<SegmentDuration>* metadata = nullptr);

// ---------------------------------------------------------------------------
// Corpus files

/// One sentence per line, lenient grammar; blank lines are skipped.
std::vector<AnnotatedSentence> parse_corpus(std::string_view text);
std::string format_corpus(const std::vector<AnnotatedSentence>& corpus);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace subseg
