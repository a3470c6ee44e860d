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

#include "subseg/eval.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "subseg/error.hpp"

namespace subseg {

BreakScore score_from_counts(const BreakCounts& c) {
  BreakScore s;
  s.counts = c;
  s.precision = c.hyp > 0 ? static_cast<double>(c.correct) / static_cast<double>(c.hyp)
                          : (c.ref == 0 ? 1.0 : 0.0);
  s.recall = c.ref > 0 ? static_cast<double>(c.correct) / static_cast<double>(c.ref)
                       : (c.hyp == 0 ? 1.0 : 0.0);
  // 2PR/(P+R) reduced to counts, so the result is one rounded division
  s.f1 = c.hyp + c.ref == 0 ? 1.0
                            : 2.0 * static_cast<double>(c.correct) / static_cast<double>(c.hyp + c.ref);
  return s;
}

BreakCounts break_counts(const AnnotatedSentence& hyp, const AnnotatedSentence& ref) {
  if (hyp.words() != ref.words()) throw TextMismatch(0);
  BreakCounts c;
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    const GapLabel h = hyp.gap(i);
    const GapLabel r = ref.gap(i);
    c.hyp += h != GapLabel::None;
    c.ref += r != GapLabel::None;
    c.correct += h != GapLabel::None && h == r;
  }
  return c;
}

BreakScore break_prf(const AnnotatedSentence& hyp, const AnnotatedSentence& ref) {
  return score_from_counts(break_counts(hyp, ref));
}

BreakScore corpus_prf(const std::vector<SentencePair>& pairs) {
  BreakCounts total;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first.words() != pairs[i].second.words()) throw TextMismatch(i);
    total += break_counts(pairs[i].first, pairs[i].second);
  }
  return score_from_counts(total);
}

BleuStats& BleuStats::operator+=(const BleuStats& o) noexcept {
  for (std::size_t n = 0; n < 4; ++n) {
    matches[n] += o.matches[n];
    totals[n] += o.totals[n];
  }
  hyp_length += o.hyp_length;
  ref_length += o.ref_length;
  return *this;
}

BleuStats bleu_stats(const std::vector<std::string>& hyp, const std::vector<std::string>& ref) {
  BleuStats st;
  st.hyp_length = hyp.size();
  st.ref_length = ref.size();
  for (std::size_t n = 1; n <= 4; ++n) {
    std::map<std::vector<std::string>, std::size_t> ref_counts;
    for (std::size_t i = 0; i + n <= ref.size(); ++i)
      ++ref_counts[std::vector<std::string>(ref.begin() + i, ref.begin() + i + n)];
    std::map<std::vector<std::string>, std::size_t> hyp_counts;
    for (std::size_t i = 0; i + n <= hyp.size(); ++i)
      ++hyp_counts[std::vector<std::string>(hyp.begin() + i, hyp.begin() + i + n)];
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) st.matches[n - 1] += std::min(count, it->second);
      st.totals[n - 1] += count;
    }
  }
  return st;
}

double bleu_score(const BleuStats& st) {
  if (st.hyp_length == 0) return st.ref_length == 0 ? 100.0 : 0.0;
  if (st.matches[0] == 0) return 0.0;
  double log_sum = std::log(static_cast<double>(st.matches[0]) / static_cast<double>(st.totals[0]));
  for (std::size_t n = 1; n < 4; ++n)
    log_sum += std::log(static_cast<double>(st.matches[n] + 1) / static_cast<double>(st.totals[n] + 1));
  const double hyp_len = static_cast<double>(st.hyp_length);
  const double ref_len = static_cast<double>(st.ref_length);
  const double bp = hyp_len < ref_len ? std::exp(1.0 - ref_len / hyp_len) : 1.0;
  return 100.0 * bp * std::exp(log_sum / 4.0);
}

double bleu(const std::vector<std::string>& hyp, const std::vector<std::string>& ref) {
  return bleu_score(bleu_stats(hyp, ref));
}

std::vector<std::string> tokens_with_breaks(const AnnotatedSentence& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back(s.words()[i]);
    if (s.gap(i) != GapLabel::None) out.emplace_back(label_name(s.gap(i)));
  }
  return out;
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["precision"] = precision;
  j["recall"] = recall;
  j["f1"] = f1;
  j["bleu_breaks"] = bleu_with_breaks;
  j["bleu_text"] = bleu_no_breaks;
  j["cpl_conformity"] = cpl_conformity_pct;
  j["counts"] = {{"correct", counts.correct}, {"hyp", counts.hyp}, {"ref", counts.ref},
                 {"hyp_lines", hyp_lines}, {"conforming_hyp_lines", conforming_hyp_lines}};
  return j.dump(2);
}

std::string EvalReport::to_table() const {
  std::ostringstream os;
  char buf[96];
  auto row = [&](const char* name, double v) {
    std::snprintf(buf, sizeof buf, "%-16s %10.4f\n", name, v);
    os << buf;
  };
  row("precision", precision);
  row("recall", recall);
  row("f1", f1);
  row("bleu_breaks", bleu_with_breaks);
  row("bleu_text", bleu_no_breaks);
  row("cpl_conformity", cpl_conformity_pct);
  std::snprintf(buf, sizeof buf, "%-16s %4zu / %zu / %zu\n", "correct/hyp/ref", counts.correct,
                counts.hyp, counts.ref);
  os << buf;
  return os.str();
}

}  // namespace subseg
