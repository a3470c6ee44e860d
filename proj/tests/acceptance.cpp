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

// Acceptance suite: one PASS/FAIL line per criterion, with wall time
// against the budget. Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "subseg/align.hpp"
#include "subseg/batch.hpp"
#include "subseg/pipeline.hpp"
#include "subseg/srt.hpp"
#include "subseg/synthetic.hpp"
#include "subseg/text.hpp"

using namespace subseg;

namespace {

const ConstraintProfile kProfile{};

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  if (!r.ok || !in_time) ++failures;
  std::printf("[%s] %d %s: %s (%.2fs / %.0fs budget%s)\n", r.ok && in_time ? "PASS" : "FAIL", id, name,
              r.detail.c_str(), secs, budget_s, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<AnnotatedSentence> all_labellings(const std::vector<std::string>& words) {
  std::vector<AnnotatedSentence> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < words.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<GapLabel> gaps(words.size());
    std::size_t c = code;
    for (auto& g : gaps) {
      g = static_cast<GapLabel>(c % 3);
      c /= 3;
    }
    out.emplace_back(words, gaps);
  }
  return out;
}

// Sentence with irregular whitespace and some multi-byte words.
std::string fuzzed_sentence(CounterRng& rng, std::size_t max_word) {
  static const char* const spaces[] = {" ", "  ", "\t", " \t ", "\n"};
  static const char* const extras[] = {"élan", "naïve", "Straße", "日本語", "¿qué?", "«oui»", "l'été,", "x"};
  const auto n = 1 + rng.below(45);
  std::string s = rng.coin() ? "" : spaces[rng.below(5)];
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i) s += spaces[rng.below(5)];
    if (rng.below(6) == 0) {
      s += extras[rng.below(8)];
    } else {
      const auto len = 1 + rng.below(max_word);
      for (std::uint64_t k = 0; k < len; ++k) s += static_cast<char>('a' + rng.below(26));
    }
  }
  if (rng.coin()) s += spaces[rng.below(5)];
  return s;
}

std::vector<AnnotatedSentence> plain_inputs(const std::vector<AnnotatedSentence>& gold) {
  std::vector<AnnotatedSentence> out;
  for (const auto& s : gold) out.push_back(AnnotatedSentence::plain(strip_breaks(s)));
  return out;
}

std::vector<SentencePair> pairs_of(const std::vector<AnnotatedSentence>& hyp,
                                   const std::vector<AnnotatedSentence>& ref) {
  std::vector<SentencePair> out;
  for (std::size_t i = 0; i < hyp.size(); ++i) out.emplace_back(hyp[i], ref[i]);
  return out;
}

// Training data in the shape of a subtitle corpus whose line breaks were
// partly lost: each sentence keeps its <eol>s with probability `keep`.
std::vector<AnnotatedSentence> with_lost_eols(const std::vector<AnnotatedSentence>& gold, double keep,
                                              std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<AnnotatedSentence> out;
  for (const auto& s : gold)
    out.push_back(static_cast<double>(rng.below(1000)) < keep * 1000.0 ? s : synthetic::collapse_eols(s));
  return out;
}

std::vector<AnnotatedSentence> eol_subset(const std::vector<AnnotatedSentence>& corpus) {
  std::vector<AnnotatedSentence> out;
  for (const auto& s : corpus)
    if (s.has_eol()) out.push_back(s);
  return out;
}

struct Models {
  LinearSegmenterModel all, ft_eol;
  std::vector<AnnotatedSentence> test;
};

const Models& segmenter_models() {
  static const Models m = [] {
    Models out;
    const auto gold = synthetic::rule_corpus(5500, 2024, kProfile);
    const std::vector<AnnotatedSentence> train_gold(gold.begin(), gold.begin() + 5000);
    out.test.assign(gold.begin() + 5000, gold.end());
    const auto train_data = with_lost_eols(train_gold, 0.3, 7);
    out.all = train(train_data, TrainingConfig{}, kProfile);
    out.ft_eol = fine_tune(out.all, eol_subset(train_data), TrainingConfig::fine_tune_defaults(), kProfile);
    return out;
  }();
  return m;
}

}  // namespace

int main() {
  criterion(1, "talk fragment alignment", 1.0, [] {
    auto doc = parse_srt(read_file(SUBSEG_TEST_DATA "/ted_1096.srt"));
    doc.talk_id = "ted_1096";
    const auto built = build_corpus(
        {doc}, {{"ted_1096", "I wanted to challenge the idea that design is but a tool to create function and beauty."}});
    const std::string expected =
        "I wanted to challenge the idea <eob> that design is but a tool <eol> to create function and beauty. <eob>";
    const std::string got = built.corpus.size() == 1 ? built.corpus[0].to_string() : "<no alignment>";
    return Outcome{got == expected, "\"" + got + "\""};
  });

  criterion(2, "break_prf equals brute-force oracle", 30.0, [] {
    std::size_t pairs = 0, mismatches = 0;
    std::vector<std::string> words;
    for (std::size_t n = 1; n <= 6; ++n) {
      words.push_back("w" + std::to_string(n));
      const auto labellings = all_labellings(words);
      std::vector<std::set<std::pair<std::size_t, int>>> sets;
      for (const auto& s : labellings) {
        std::set<std::pair<std::size_t, int>> b;
        for (std::size_t i = 0; i < n; ++i)
          if (s.gap(i) != GapLabel::None) b.insert({i + 1, static_cast<int>(s.gap(i))});
        sets.push_back(std::move(b));
      }
      for (std::size_t h = 0; h < labellings.size(); ++h) {
        for (std::size_t r = 0; r < labellings.size(); ++r) {
          ++pairs;
          std::size_t both = 0;
          for (const auto& b : sets[h]) both += sets[r].count(b);
          const std::size_t nh = sets[h].size(), nr = sets[r].size();
          // exact rationals: numerator/denominator pairs
          const auto p = nh ? std::pair{both, nh} : std::pair{std::size_t{nr == 0}, std::size_t{1}};
          const auto rc = nr ? std::pair{both, nr} : std::pair{std::size_t{nh == 0}, std::size_t{1}};
          const auto f = nh + nr ? std::pair{2 * both, nh + nr} : std::pair{std::size_t{1}, std::size_t{1}};
          const auto s = break_prf(labellings[h], labellings[r]);
          auto equal = [](double v, std::pair<std::size_t, std::size_t> q) {
            return v == static_cast<double>(q.first) / static_cast<double>(q.second) &&
                   v * static_cast<double>(q.second) == static_cast<double>(q.first);
          };
          const bool counts_ok = s.counts.correct == both && s.counts.hyp == nh && s.counts.ref == nr;
          if (!counts_ok || !equal(s.precision, p) || !equal(s.recall, rc) || !equal(s.f1, f)) ++mismatches;
        }
      }
    }
    return Outcome{mismatches == 0, fmt("%.0f pairs, %.0f mismatches", double(pairs), double(mismatches))};
  });

  criterion(3, "count char baseline line conformity", 10.0, [] {
    const auto sentences = synthetic::random_sentences(10000, 3, {1, 60, 41});
    const auto out = segment_count_char_batch(sentences, kProfile, 11);
    const auto report = conformity_stats(out, kProfile);
    return Outcome{report.conforming_lines == report.total_lines,
                   fmt("%.0f of %.0f lines <= 42, longest %.0f", double(report.conforming_lines),
                       double(report.total_lines),
                       double(*std::max_element(report.worst_line_length.begin(), report.worst_line_length.end())))};
  });

  criterion(4, "ft_eol F1 beats count char by >= 10 points", 300.0, [] {
    const auto& m = segmenter_models();
    const auto inputs = plain_inputs(m.test);
    std::vector<std::string> plain;
    for (const auto& s : inputs) plain.push_back(strip_breaks(s));
    const double baseline = corpus_prf(pairs_of(segment_count_char_batch(plain, kProfile, 5), m.test)).f1;
    const double ft = corpus_prf(pairs_of(segment_learned_batch(m.ft_eol, inputs, kProfile), m.test)).f1;
    return Outcome{(ft - baseline) * 100.0 >= 10.0,
                   fmt("ft_eol F1 %.2f, count char F1 %.2f, gap %.2f points", ft * 100, baseline * 100,
                       (ft - baseline) * 100)};
  });

  criterion(5, "fine-tuning raises recall on <eol>-rich data", 300.0, [] {
    const auto& m = segmenter_models();
    const auto test = eol_subset(m.test);
    const auto inputs = plain_inputs(test);
    const auto all = corpus_prf(pairs_of(segment_learned_batch(m.all, inputs, kProfile), test));
    const auto ft = corpus_prf(pairs_of(segment_learned_batch(m.ft_eol, inputs, kProfile), test));
    return Outcome{ft.recall > all.recall,
                   fmt("recall ft_eol %.2f vs All %.2f, precision %.2f", ft.recall * 100, all.recall * 100,
                       ft.precision * 100) +
                       fmt(" vs %.2f, %.0f sentences", all.precision * 100, double(test.size()))};
  });

  criterion(6, "text preserved by both segmenters", 60.0, [] {
    const auto& m = segmenter_models();
    CounterRng rng(99);
    std::vector<std::string> sentences;
    for (int i = 0; i < 10000; ++i) sentences.push_back(fuzzed_sentence(rng, 14));
    std::vector<AnnotatedSentence> inputs;
    for (const auto& s : sentences) inputs.push_back(AnnotatedSentence::plain(s));
    const auto cc = segment_count_char_batch(sentences, kProfile, 13);
    const auto learned = segment_learned_batch(m.ft_eol, inputs, kProfile);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      const auto expected = normalize_whitespace(sentences[i]);
      bad += strip_breaks(cc[i]) != expected;
      bad += strip_breaks(learned[i]) != expected;
    }
    return Outcome{bad == 0, fmt("%.0f of %.0f outputs differ from the input text", double(bad),
                                 2.0 * double(sentences.size()))};
  });

  criterion(7, "iterative re-annotation raises conformity", 600.0, [] {
    const auto gold = synthetic::rule_corpus(4000, 77, kProfile);
    const auto corpus = with_lost_eols(gold, 0.1, 8);
    TrainingConfig config;
    const auto base = train(corpus, config, kProfile);
    const auto tuned = fine_tune(base, eol_subset(corpus), TrainingConfig::fine_tune_defaults(), kProfile);
    ReannotateConfig rc;
    rc.iterations = 3;
    const auto out = reannotate(corpus, base, tuned, kProfile, rc);
    const double start = conformity_stats(corpus, kProfile).line_conformity();
    bool monotone = true;
    double previous = start;
    std::string trace = fmt("start %.1f%%", start * 100);
    for (const auto& r : out.reports) {
      monotone = monotone && r.conformity_after >= previous;
      previous = r.conformity_after;
      trace += fmt(", iter %.0f %.1f%%", double(r.iteration), r.conformity_after * 100);
    }
    if (out.reports.size() < rc.iterations) trace += " (stopped: nothing left to accept)";
    const double first = out.reports.empty() ? start : out.reports[0].conformity_after;
    return Outcome{start <= 0.5 && first >= 0.8 && monotone, trace};
  });

  criterion(8, "round trips", 60.0, [] {
    // canonical .srt files: serialize, parse, serialize again
    CounterRng rng(5);
    std::size_t srt_bad = 0;
    const auto gold = synthetic::rule_corpus(300, 12, kProfile);
    for (std::size_t f = 0; f < 30; ++f) {
      SubtitleDocument doc{"talk", {}};
      double offset = 0.0;
      for (std::size_t k = 0; k < 10; ++k) {
        const auto& s = gold[f * 10 + k];
        const SegmentDuration window{"talk.wav", offset, 1.0 + double(rng.below(5000)) / 1000.0};
        for (auto& cue : render_srt(s, window, doc.subtitles.size() + 1)) doc.subtitles.push_back(cue);
        offset += window.duration + double(rng.below(3000)) / 1000.0;
      }
      const auto text = serialize_srt(doc);
      srt_bad += serialize_srt(parse_srt(text)) != text;
    }
    const auto fragment = read_file(SUBSEG_TEST_DATA "/ted_1096.srt");
    const auto canonical = serialize_srt(parse_srt(fragment));
    srt_bad += serialize_srt(parse_srt(canonical)) != canonical;

    std::size_t inverse_bad = 0;
    for (int i = 0; i < 10000; ++i) {
      const auto s = synthetic::random_strict(rng);
      const auto text = strip_breaks(s);
      const auto breaks = extract_breaks(s);
      inverse_bad += apply_breaks(text, breaks, Grammar::Strict) != s;
      inverse_bad += AnnotatedSentence::parse(s.to_string(), Grammar::Strict) != s;
    }
    return Outcome{srt_bad == 0 && inverse_bad == 0,
                   fmt("%.0f of 31 srt files changed, %.0f of 10000 sentences broke the inverse pair",
                       double(srt_bad), double(inverse_bad))};
  });

  criterion(9, "reading speed of cue 164", 1.0, [] {
    const auto doc = parse_srt(read_file(SUBSEG_TEST_DATA "/ted_1096.srt"));
    const auto& cue = doc.subtitles.at(0);
    const auto s = AnnotatedSentence::parse(cue.lines.at(0) + " <eob>");
    const SegmentDuration window{"ted_1096.wav", double(cue.start.millis) / 1000.0,
                                 double(cue.end.millis - cue.start.millis) / 1000.0};
    const auto r = check_cps(s, window, kProfile);
    return Outcome{std::abs(r.cps - 20.60) <= 0.01 && r.conforming,
                   fmt("%.4f cps over %.3f s, conforming at 21: %s", r.cps, window.duration) +
                       (r.conforming ? "yes" : "no")};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
