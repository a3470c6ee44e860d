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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "subseg/batch.hpp"
#include "subseg/error.hpp"
#include "subseg/segmenters.hpp"
#include "subseg/synthetic.hpp"
#include "subseg/text.hpp"

using namespace subseg;

namespace {

const ConstraintProfile kProfile{};

bool has(const std::vector<std::string>& features, const std::string& f) {
  return std::find(features.begin(), features.end(), f) != features.end();
}

const LinearSegmenterModel& rule_model() {
  static const auto model = [] {
    TrainingConfig config;
    config.epochs = 6;
    return train(synthetic::rule_corpus(1500, 101, kProfile), config, kProfile);
  }();
  return model;
}

// Test-side greedy decoder: at each gap take the best label the grammar
// allows, with the line state implied by earlier choices.
std::vector<GapLabel> greedy(const LinearSegmenterModel& model, const AnnotatedSentence& input,
                             SegmentMode mode) {
  const auto& words = input.words();
  const auto masks = gap_masks(input, mode);
  std::vector<GapLabel> out(words.size());
  std::size_t line = 0;
  GapLabel prev = GapLabel::Eob;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t csb = line == 0 ? char_count(words[i]) : line + 1 + char_count(words[i]);
    const auto scores = model.score(extract_features(words, i + 1, csb, prev, kProfile));
    std::uint8_t allowed = masks[i];
    if (prev == GapLabel::Eol) allowed &= static_cast<std::uint8_t>(~(1u << 1));
    if (!allowed) allowed = 1u << 2;
    // ties go to the decoder's candidate order: <eol>, <eob>, none
    GapLabel best = GapLabel::None;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int k : {1, 2, 0}) {
      if (!(allowed & (1u << k)) || !(scores[k] > best_score)) continue;
      best_score = scores[k];
      best = static_cast<GapLabel>(k);
    }
    out[i] = best;
    if (best == GapLabel::None) {
      line = csb;
    } else {
      line = 0;
      prev = best;
    }
  }
  return out;
}

// Every labelling allowed by the masks and the two-line grammar.
void enumerate(const std::vector<std::uint8_t>& masks, std::vector<GapLabel>& cur, bool eol_open,
               const std::function<void(const std::vector<GapLabel>&)>& visit) {
  const std::size_t i = cur.size();
  if (i == masks.size()) {
    visit(cur);
    return;
  }
  for (int k = 0; k < 3; ++k) {
    const auto g = static_cast<GapLabel>(k);
    if (!(masks[i] & (1u << k))) continue;
    if (g == GapLabel::Eol && eol_open) continue;
    cur.push_back(g);
    enumerate(masks, cur, g == GapLabel::Eol || (g == GapLabel::None && eol_open), visit);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("count char: short sentences get one terminal break") {
  CHECK(segment_count_char("C'est donc toujours plus difficile.", kProfile, 1).to_string() ==
        "C'est donc toujours plus difficile. <eob>");
  CHECK(segment_count_char("hi", kProfile, 1).to_string() == "hi <eob>");
  CHECK(segment_count_char("", kProfile, 1).empty());
}

TEST_CASE("count char: hand trace on five-character words") {
  // 17 words of 5 chars = 101 chars; a 42-char line holds 7 words (41 chars)
  std::vector<std::string> words(17, "abcde");
  const std::string sentence = join_words(words);
  REQUIRE(sentence.size() == 101);
  bool saw_eol_first = false, saw_eob_first = false;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const auto s = segment_count_char(sentence, kProfile, seed);
    const auto breaks = extract_breaks(s);
    REQUIRE(breaks.size() == 3);
    CHECK(breaks[0].gap == 7);
    CHECK(breaks[1].gap == 14);
    CHECK(breaks[2] == BreakPosition{17, GapLabel::Eob});
    if (breaks[0].kind == GapLabel::Eol) {
      CHECK(breaks[1].kind == GapLabel::Eob);
      saw_eol_first = true;
    } else {
      saw_eob_first = true;
    }
    CHECK(s == segment_count_char(sentence, kProfile, seed));
  }
  CHECK(saw_eol_first);
  CHECK(saw_eob_first);
}

TEST_CASE("count char: over-long words are rejected") {
  CHECK_THROWS_AS(segment_count_char("a " + std::string(43, 'x'), kProfile, 1), WordTooLong);
  CHECK_NOTHROW(segment_count_char("a " + std::string(42, 'x'), kProfile, 1));
}

TEST_CASE("count char properties") {
  CounterRng rng(47);
  for (int i = 0; i < 2000; ++i) {
    const auto sentence = synthetic::random_sentence(rng);
    const auto seed = rng.next();
    const auto s = segment_count_char(sentence, kProfile, seed);
    CHECK(s.is_strict());
    CHECK(check_cpl(s, kProfile).conforming);
    CHECK(strip_breaks(s) == normalize_whitespace(sentence));
    CHECK(s == segment_count_char(sentence, kProfile, seed));
  }
}

TEST_CASE("extract_features") {
  const auto words = split_words(
      "I wanted to challenge the idea that design is but a tool to create function and beauty.");
  // after "idea": line "I wanted to challenge the idea" is 30 chars
  const auto f = extract_features(words, 6, 30, GapLabel::Eob, kProfile);
  CHECK(has(f, "punct=0"));
  CHECK(has(f, "nw=that"));
  CHECK(has(f, "w=idea"));
  CHECK(has(f, "pb=eob"));
  CHECK(has(f, "ovf=0"));
  CHECK_FALSE(has(f, "eos"));
  CHECK(f == extract_features(words, 6, 30, GapLabel::Eob, kProfile));

  const auto last = extract_features(words, words.size(), 30, GapLabel::Eol, kProfile);
  CHECK(has(last, "eos"));
  CHECK(has(last, "punct=1"));
  CHECK(has(last, "pc=."));

  // 40 chars so far, next word "that" would make 45
  CHECK(has(extract_features(words, 6, 40, GapLabel::Eob, kProfile), "ovf=1"));
}

TEST_CASE("train: errors and determinism") {
  CHECK_THROWS_AS(train({}, TrainingConfig{}), EmptyCorpus);
  CHECK_THROWS_AS(train({AnnotatedSentence::parse("a b")}, TrainingConfig{}), GrammarViolation);
  TrainingConfig zero;
  zero.epochs = 0;
  CHECK_THROWS_AS(train({AnnotatedSentence::parse("a <eob>")}, zero), std::invalid_argument);

  const auto corpus = synthetic::rule_corpus(300, 7, kProfile);
  TrainingConfig config;
  config.epochs = 3;
  config.seed = 99;
  const auto a = train(corpus, config, kProfile);
  const auto b = train(corpus, config, kProfile);
  CHECK(a.same_weights(b));
  CHECK(a.meta.seed == 99);
  CHECK(a.meta.epochs == 3);
  CHECK_FALSE(a.meta.fine_tuned);
  std::ostringstream sa, sb;
  a.save(sa);
  b.save(sb);
  CHECK(sa.str() == sb.str());
}

TEST_CASE("train: self fit on the greedy rule") {
  const auto corpus = synthetic::rule_corpus(1500, 101, kProfile);
  std::size_t gold = 0, found = 0;
  for (const auto& s : corpus) {
    const auto out = segment_learned(rule_model(), AnnotatedSentence::plain(strip_breaks(s)), kProfile);
    for (const auto& b : extract_breaks(s)) {
      ++gold;
      const auto hyp = extract_breaks(out);
      found += std::find(hyp.begin(), hyp.end(), b) != hyp.end();
    }
  }
  CHECK(static_cast<double>(found) / static_cast<double>(gold) >= 0.95);
}

TEST_CASE("train: a single sentence is memorized") {
  // one perceptron pass is not always enough: updates on shared features
  // can disturb gaps that were right, so allow a second pass
  const auto s = AnnotatedSentence::parse(
      "I wanted to challenge the idea <eob> that design is but a tool <eol> to create function and beauty. <eob>",
      Grammar::Strict);
  for (std::size_t epochs : {std::size_t{2}, std::size_t{12}}) {
    TrainingConfig config;
    config.epochs = epochs;
    const auto model = train({s}, config, kProfile);
    CHECK(segment_learned(model, AnnotatedSentence::plain(strip_breaks(s)), kProfile).to_string() ==
          s.to_string());
  }
}

TEST_CASE("fine_tune") {
  const auto base = rule_model();
  CHECK_THROWS_AS(fine_tune(base, {}, TrainingConfig::fine_tune_defaults()), EmptyCorpus);
  try {
    fine_tune(base, {AnnotatedSentence::parse("a <eol> b <eob>"), AnnotatedSentence::parse("c <eob>")},
              TrainingConfig::fine_tune_defaults());
    FAIL("expected SubsetViolation");
  } catch (const SubsetViolation& e) {
    CHECK(e.sentence() == 1);
  }

  std::vector<AnnotatedSentence> subset;
  for (const auto& s : synthetic::rule_corpus(200, 5, kProfile))
    if (s.has_eol()) subset.push_back(s);
  auto config = TrainingConfig::fine_tune_defaults();
  config.learning_rate = 0.0;
  const auto same = fine_tune(base, subset, config, kProfile);
  CHECK(same.same_weights(base, 1e-12));
  CHECK(same.meta.fine_tuned);
  CHECK(same.meta.fine_tune_epochs == 6);
}

TEST_CASE("fine_tune raises <eol> output on <eol>-rich data") {
  // All: most sentences lost their <eol>s; the subset keeps them
  const auto gold = synthetic::rule_corpus(1600, 303, kProfile);
  std::vector<AnnotatedSentence> all, subset, held_out;
  CounterRng rng(1);
  for (std::size_t i = 0; i < 1400; ++i) {
    all.push_back(rng.below(10) < 8 ? synthetic::collapse_eols(gold[i]) : gold[i]);
    if (all.back().has_eol()) subset.push_back(all.back());
  }
  for (std::size_t i = 1400; i < gold.size(); ++i)
    if (gold[i].has_eol()) held_out.push_back(gold[i]);
  TrainingConfig config;
  config.epochs = 6;
  const auto base = train(all, config, kProfile);
  const auto tuned = fine_tune(base, subset, TrainingConfig::fine_tune_defaults(), kProfile);

  std::size_t base_eols = 0, tuned_eols = 0;
  for (const auto& s : held_out) {
    const auto input = AnnotatedSentence::plain(strip_breaks(s));
    base_eols += segment_learned(base, input, kProfile).count(GapLabel::Eol);
    tuned_eols += segment_learned(tuned, input, kProfile).count(GapLabel::Eol);
  }
  CHECK(tuned_eols > base_eols);
}

TEST_CASE("segment_learned: segmented and short inputs") {
  const auto& model = rule_model();
  const auto segmented = AnnotatedSentence::parse("Je m'enroule en une petite <eol> boule comme un foetus. <eob>");
  CHECK(segment_learned(model, segmented, kProfile) == segmented);
  CHECK(segment_learned(model, AnnotatedSentence::plain("C'est donc toujours plus difficile."), kProfile)
            .to_string() == "C'est donc toujours plus difficile. <eob>");
}

TEST_CASE("decode: exact search equals exhaustive enumeration") {
  const auto& model = rule_model();
  CounterRng rng(53);
  const synthetic::SentenceShape shape{2, 6, 12};
  for (int trial = 0; trial < 150; ++trial) {
    auto input = AnnotatedSentence::plain(synthetic::random_sentence(rng, shape));
    const SegmentMode mode = trial % 2 ? SegmentMode::EolOnly : SegmentMode::Full;
    if (mode == SegmentMode::EolOnly) {
      // freeze a random block structure
      for (std::size_t i = 0; i + 1 < input.size(); ++i)
        if (rng.below(3) == 0) input.set_gap(i, GapLabel::Eob);
      input.set_gap(input.size() - 1, GapLabel::Eob);
    }
    const auto masks = gap_masks(input, mode);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<GapLabel> cur;
    enumerate(masks, cur, false, [&](const std::vector<GapLabel>& labels) {
      best = std::max(best, score_labels(model, input.words(), labels, kProfile));
    });
    const auto exact = decode(model, input, kProfile, {mode, 0});
    CHECK(exact.score == doctest::Approx(best).epsilon(1e-12));
    CHECK(score_labels(model, input.words(), exact.sentence.gaps(), kProfile) ==
          doctest::Approx(exact.score).epsilon(1e-12));
    CHECK(exact.sentence.is_strict());
    if (mode == SegmentMode::EolOnly)
      for (std::size_t i = 0; i < input.size(); ++i)
        CHECK((input.gap(i) == GapLabel::Eob) == (exact.sentence.gap(i) == GapLabel::Eob));
  }
}

TEST_CASE("decode: beam width properties") {
  const auto& model = rule_model();
  CounterRng rng(59);
  std::size_t monotone_violations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto input = AnnotatedSentence::plain(synthetic::random_sentence(rng));
    const auto mode = trial % 3 == 0 ? SegmentMode::EolOnly : SegmentMode::Full;
    const auto one = decode(model, input, kProfile, {mode, 1});
    CHECK(one.sentence.gaps() == greedy(model, input, mode));
    const double exact = decode(model, input, kProfile, {mode, 0}).score;
    double previous = one.score;
    for (std::size_t k = 2; k <= 8; ++k) {
      const double score = decode(model, input, kProfile, {mode, k}).score;
      CHECK(score <= exact + 1e-9);
      monotone_violations += score < previous - 1e-9;
      previous = score;
    }
  }
  CHECK(monotone_violations == 0);
}

TEST_CASE("decode: grammar and text preservation") {
  const auto& model = rule_model();
  CounterRng rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto sentence = synthetic::random_sentence(rng);
    const auto plain = AnnotatedSentence::plain(sentence);
    const auto full = segment_learned(model, plain, kProfile);
    CHECK(full.is_strict());
    CHECK(strip_breaks(full) == normalize_whitespace(sentence));

    const auto frozen = synthetic::collapse_eols(synthetic::rule_segment(plain.words(), kProfile));
    const auto eol_only = segment_learned(model, frozen, kProfile, {SegmentMode::EolOnly, 4});
    CHECK(eol_only.is_strict());
    CHECK(eol_only.words() == frozen.words());
    for (std::size_t i = 0; i < frozen.size(); ++i) {
      CHECK((frozen.gap(i) == GapLabel::Eob) == (eol_only.gap(i) == GapLabel::Eob));
    }
  }
}

TEST_CASE("decode: over-long words get a line of their own") {
  const std::string word(50, 'x');
  for (std::size_t beam : {std::size_t{0}, std::size_t{1}, std::size_t{4}}) {
    const auto input = AnnotatedSentence::plain("a few words " + word + " and more after it");
    const auto out = segment_learned(rule_model(), input, kProfile, {SegmentMode::Full, beam});
    CHECK(out.words() == input.words());
    CHECK(out.is_strict());
    CHECK(out.gap(2) != GapLabel::None);
    CHECK(out.gap(3) != GapLabel::None);
    const auto lengths = check_cpl(out, kProfile).line_lengths;
    CHECK(std::count(lengths.begin(), lengths.end(), 50) == 1);
  }
  // a frozen layout that joins it to other words is kept
  const auto frozen = AnnotatedSentence::parse("a " + word + " b <eob>");
  CHECK(segment_learned(rule_model(), frozen, kProfile, {SegmentMode::EolOnly, 4}).words() == frozen.words());
}

TEST_CASE("model persistence") {
  const auto& model = rule_model();
  std::stringstream ss;
  model.save(ss);
  const auto text = ss.str();
  CHECK(text.rfind("format\tsubseg-linear-model\nversion\t1\n", 0) == 0);
  const auto back = LinearSegmenterModel::load(ss);
  CHECK(back.same_weights(model));
  CHECK(back.meta == model.meta);

  std::stringstream again;
  back.save(again);
  CHECK(again.str() == text);

  std::istringstream wrong_version("format\tsubseg-linear-model\nversion\t2\nweights\n");
  CHECK_THROWS_AS(LinearSegmenterModel::load(wrong_version), ModelFormatError);
  std::istringstream not_a_model("hello\tworld\n");
  CHECK_THROWS_AS(LinearSegmenterModel::load(not_a_model), ModelFormatError);
  std::istringstream bad_record("format\tsubseg-linear-model\nversion\t1\nweights\nbias\tmaybe\t1\n");
  CHECK_THROWS_AS(LinearSegmenterModel::load(bad_record), ModelFormatError);
  std::istringstream truncated("format\tsubseg-linear-model\nversion\t1\n");
  CHECK_THROWS_AS(LinearSegmenterModel::load(truncated), ModelFormatError);

  // unseen features score zero
  CHECK(model.score({"no-such-feature"}) == LabelWeights{});
}
