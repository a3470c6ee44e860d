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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subseg/annotate.hpp"
#include "subseg/constraints.hpp"

namespace subseg {

// ---------------------------------------------------------------------------
// Character-counting baseline

/// Fills each line up to the CPL limit and breaks after the last word that
/// fits. After an <eob> (or at sentence start) the break kind is drawn at
/// random between <eol> and <eob>; after an <eol> it is always <eob>. The
/// final break is always <eob>. Throws WordTooLong if a word alone exceeds
/// the limit.
AnnotatedSentence segment_count_char(std::string_view sentence, const ConstraintProfile& profile,
                                     std::uint64_t seed);

// ---------------------------------------------------------------------------
// Linear gap classifier

struct TrainingConfig {
  std::size_t epochs = 12;
  double learning_rate = 1.0;
  std::uint64_t seed = 1;
  bool shuffle = true;
  std::size_t beam = 4;  // search width used for the perceptron updates

  static TrainingConfig fine_tune_defaults() { return TrainingConfig{6, 1.0, 1, true, 4}; }
};

struct TrainingMeta {
  std::size_t epochs = 0;
  double learning_rate = 0.0;
  std::uint64_t seed = 0;
  bool fine_tuned = false;
  std::size_t fine_tune_epochs = 0;
  std::size_t cpl_limit = 42;

  friend bool operator==(const TrainingMeta&, const TrainingMeta&) = default;
};

using LabelWeights = std::array<double, kNumLabels>;

/// Multiclass linear model over GapLabel. Unknown features score zero.
class LinearSegmenterModel {
public:
  /// Index of `feature`, or -1 if it is not in the vocabulary.
  std::int64_t find(const std::string& feature) const;
  /// Index of `feature`, adding it with zero weights when absent.
  std::size_t intern(const std::string& feature);

  const LabelWeights& weights(std::size_t id) const { return weights_[id]; }
  LabelWeights& weights(std::size_t id) { return weights_[id]; }
  const std::string& feature(std::size_t id) const { return names_[id]; }
  std::size_t feature_count() const noexcept { return names_.size(); }

  /// Sum of weights of known features, per label.
  LabelWeights score(const std::vector<std::string>& features) const;

  TrainingMeta meta;

  /// Versioned text format: header of `key<TAB>value` lines, a `weights`
  /// line, then one `feature<TAB>label<TAB>weight` record per non-zero weight.
  void save(std::ostream& os) const;
  static LinearSegmenterModel load(std::istream& is);

  /// Same weights over the same feature set; order-insensitive.
  bool same_weights(const LinearSegmenterModel& other, double tolerance = 0.0) const;

private:
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> names_;
  std::vector<LabelWeights> weights_;
};

inline constexpr int kModelFormatVersion = 1;

/// Feature strings for the gap after word `gap` (1-based). `chars_since_break`
/// is the length of the current line if the break were placed here.
std::vector<std::string> extract_features(const std::vector<std::string>& words, std::size_t gap,
                                          std::size_t chars_since_break, GapLabel prev_break,
                                          const ConstraintProfile& profile);

/// Structured averaged perceptron: each sentence is decoded with the
/// constrained beam search and, where the gold labelling drops out of the
/// beam, the gold prefix is rewarded and the predicted prefix penalized. Throws EmptyCorpus, or
/// GrammarViolation when a sentence is not strict.
LinearSegmenterModel train(const std::vector<AnnotatedSentence>& corpus, const TrainingConfig& config,
                           const ConstraintProfile& profile = {});

/// Continues training from `model` on sentences that all contain <eol>.
/// Throws SubsetViolation naming the first sentence without one.
LinearSegmenterModel fine_tune(const LinearSegmenterModel& model,
                               const std::vector<AnnotatedSentence>& eol_subset,
                               const TrainingConfig& config, const ConstraintProfile& profile = {});

enum class SegmentMode {
  Full,     // decide every gap; breaks already in the input are kept
  EolOnly,  // input <eob>s are frozen; only <eol> may be added inside blocks
};

struct DecodeOptions {
  SegmentMode mode = SegmentMode::Full;
  std::size_t beam = 4;  // 0 searches the full state space
};

struct Decoded {
  AnnotatedSentence sentence;
  double score = 0.0;
};

/// Constrained left-to-right beam search. The result always ends in <eob>,
/// never holds two <eol>s in a block and keeps the input words verbatim.
Decoded decode(const LinearSegmenterModel& model, const AnnotatedSentence& input,
               const ConstraintProfile& profile, const DecodeOptions& options = {});

/// decode(...).sentence. A strict input in full mode is returned unchanged.
AnnotatedSentence segment_learned(const LinearSegmenterModel& model, const AnnotatedSentence& input,
                                  const ConstraintProfile& profile, const DecodeOptions& options = {});

/// Allowed labels at each gap for `input` under `mode`, as bit masks
/// (bit k set when GapLabel k may be chosen), before grammar constraints.
std::vector<std::uint8_t> gap_masks(const AnnotatedSentence& input, SegmentMode mode);

/// Model score of a full labelling, with line state derived from the labels.
double score_labels(const LinearSegmenterModel& model, const std::vector<std::string>& words,
                    const std::vector<GapLabel>& labels, const ConstraintProfile& profile);

}  // namespace subseg
