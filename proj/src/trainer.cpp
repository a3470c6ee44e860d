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

#include <numeric>

#include <algorithm>

#include "feature_parts.hpp"
#include "search.hpp"
#include "subseg/error.hpp"
#include "subseg/rng.hpp"
#include "subseg/segmenters.hpp"
#include "subseg/text.hpp"

namespace subseg {

namespace {

// Structured averaged perceptron with early update, resumed from the gold
// prefix after each update. Alongside the weights
// w we keep u = sum of step * delta; the average after c steps is w - u / c.
class Perceptron {
public:
  Perceptron(LinearSegmenterModel& model, const ConstraintProfile& profile)
      : model_(model), profile_(profile), sums_(model.feature_count()) {}

  // Adds `rate` to every feature fired at gaps [from, to) of a labelling,
  // with line state derived from the labels themselves.
  void reinforce(const std::vector<std::string>& words, const std::vector<GapLabel>& labels,
                 std::size_t from, std::size_t to, double rate) {
    std::size_t line = 0;
    GapLabel prev = GapLabel::Eob;
    for (std::size_t i = 0; i < to; ++i) {
      const std::size_t csb = line == 0 ? char_count(words[i]) : line + 1 + char_count(words[i]);
      if (i < from) {
        line = labels[i] == GapLabel::None ? csb : 0;
        if (labels[i] != GapLabel::None) prev = labels[i];
        continue;
      }
      feats_.clear();
      detail::static_features(words, i + 1, feats_);
      detail::state_features(words, i + 1, csb, prev, profile_, feats_);
      const auto k = static_cast<std::size_t>(labels[i]);
      for (const auto& f : feats_) {
        const std::size_t id = model_.intern(f);
        if (id >= sums_.size()) sums_.resize(id + 1);
        model_.weights(id)[k] += rate;
        sums_[id][k] += step_ * rate;
      }
      if (labels[i] == GapLabel::None) {
        line = csb;
      } else {
        line = 0;
        prev = labels[i];
      }
    }
  }

  void tick() { ++step_; }

  void finish() {
    for (std::size_t id = 0; id < sums_.size(); ++id)
      for (std::size_t k = 0; k < kNumLabels; ++k) model_.weights(id)[k] -= sums_[id][k] / step_;
  }

private:
  LinearSegmenterModel& model_;
  const ConstraintProfile& profile_;
  std::vector<LabelWeights> sums_;
  std::vector<std::string> feats_;
  double step_ = 1.0;
};

void run_epochs(LinearSegmenterModel& model, const std::vector<AnnotatedSentence>& corpus,
                const TrainingConfig& config, const ConstraintProfile& profile) {
  if (config.epochs < 1) throw std::invalid_argument("epochs must be at least 1");
  if (!(config.learning_rate >= 0)) throw std::invalid_argument("learning rate must be non-negative");
  for (const auto& s : corpus) require_strict(s);

  Perceptron perceptron(model, profile);
  CounterRng rng(config.seed);
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    if (config.shuffle) rng.shuffle(order);
    for (std::size_t idx : order) {
      const auto& s = corpus[idx];
      const auto masks = gap_masks(AnnotatedSentence::plain(strip_breaks(s)), SegmentMode::Full);
      // each time the gold prefix falls out of the beam: update, then
      // resume the search from the gold prefix
      for (std::size_t from = 0; from < s.size();) {
        const auto found =
            detail::beam_search(model, s.words(), masks, profile, config.beam, &s.gaps(), from);
        const std::size_t to = found.early_stop ? found.early_stop : s.size();
        if (!std::equal(found.labels.begin(), found.labels.begin() + static_cast<std::ptrdiff_t>(to),
                        s.gaps().begin())) {
          perceptron.reinforce(s.words(), s.gaps(), from, to, config.learning_rate);
          perceptron.reinforce(s.words(), found.labels, from, to, -config.learning_rate);
        }
        from = to;
      }
      perceptron.tick();
    }
  }
  perceptron.finish();
}

}  // namespace

LinearSegmenterModel train(const std::vector<AnnotatedSentence>& corpus, const TrainingConfig& config,
                           const ConstraintProfile& profile) {
  if (corpus.empty()) throw EmptyCorpus();
  LinearSegmenterModel model;
  run_epochs(model, corpus, config, profile);
  model.meta.epochs = config.epochs;
  model.meta.learning_rate = config.learning_rate;
  model.meta.seed = config.seed;
  model.meta.cpl_limit = profile.cpl_limit;
  return model;
}

LinearSegmenterModel fine_tune(const LinearSegmenterModel& model,
                               const std::vector<AnnotatedSentence>& eol_subset,
                               const TrainingConfig& config, const ConstraintProfile& profile) {
  if (eol_subset.empty()) throw EmptyCorpus();
  for (std::size_t i = 0; i < eol_subset.size(); ++i)
    if (!eol_subset[i].has_eol()) throw SubsetViolation(i);
  LinearSegmenterModel tuned = model;
  run_epochs(tuned, eol_subset, config, profile);
  tuned.meta.fine_tuned = true;
  tuned.meta.fine_tune_epochs = config.epochs;
  return tuned;
}

}  // namespace subseg
