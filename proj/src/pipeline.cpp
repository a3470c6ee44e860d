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

#include "subseg/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>

#include "subseg/align.hpp"
#include "subseg/batch.hpp"
#include "subseg/error.hpp"
#include "subseg/text.hpp"

namespace subseg {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("write failed for " + path.string());
}

std::vector<SubtitleDocument> load_srt_dir(const fs::path& dir, std::vector<std::string>* warnings) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".srt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<SubtitleDocument> docs;
  for (const auto& file : files) {
    std::vector<SrtWarning> found;
    SubtitleDocument doc;
    try {
      doc = parse_srt(read_file(file), &found);
    } catch (const Error& e) {
      throw Error(file.string() + ": " + e.what());
    }
    doc.talk_id = file.stem().string();
    if (warnings)
      for (const auto& w : found)
        warnings->push_back(file.filename().string() + ": cue block " + std::to_string(w.block_number) +
                            ": " + w.message);
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<TalkSentence> parse_talk_sentences(std::string_view text) {
  std::vector<TalkSentence> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw Error("sentences line " + std::to_string(line_no) + ": expected talk_id<TAB>sentence");
    out.push_back({std::string(line.substr(0, tab)), std::string(line.substr(tab + 1))});
  }
  return out;
}

std::vector<TalkSentence> pair_with_metadata(const std::vector<std::string>& sentences,
                                             const std::vector<SegmentDuration>& metadata) {
  if (sentences.size() != metadata.size())
    throw Error("sentence count " + std::to_string(sentences.size()) + " does not match metadata count " +
                std::to_string(metadata.size()));
  std::vector<TalkSentence> out;
  out.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i)
    out.push_back({fs::path(metadata[i].audio_id).stem().string(), sentences[i]});
  return out;
}

CorpusBuild build_corpus(std::vector<SubtitleDocument> docs, const std::vector<TalkSentence>& sentences) {
  CorpusBuild result;
  for (auto& doc : docs) {
    for (auto& cue : doc.subtitles) {
      if (cue.lines.size() != 1) continue;
      auto split = restore_eol_from_double_space(cue.lines.front());
      if (split.warning)
        result.warnings.push_back(doc.talk_id + ": cue " + std::to_string(cue.index) +
                                  " has more than one double space");
      cue.lines = std::move(split.lines);
    }
  }
  const InvertedIndex index(docs);

  using Outcome = std::variant<AnnotatedSentence, std::string>;
  std::vector<Outcome> outcomes(sentences.size());
  const auto count = static_cast<std::int64_t>(sentences.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& s = sentences[static_cast<std::size_t>(i)];
    try {
      outcomes[static_cast<std::size_t>(i)] = align_sentence(s.text, s.talk_id, index);
    } catch (const NoAlignment& e) {
      outcomes[static_cast<std::size_t>(i)] = std::string(e.what());
    }
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (auto* s = std::get_if<AnnotatedSentence>(&outcomes[i])) {
      result.corpus.push_back(std::move(*s));
      result.source.push_back(i);
    } else {
      result.failures.push_back({i, sentences[i].talk_id, std::get<std::string>(outcomes[i])});
    }
  }
  return result;
}

bool accept_reannotation(const AnnotatedSentence& s, const ConstraintProfile& profile) {
  if (!s.has_eol() || !check_cpl(s, profile).conforming) return false;
  bool eol_in_block = false;
  for (auto g : s.gaps()) {
    if (g == GapLabel::Eol) {
      if (eol_in_block) return false;
      eol_in_block = true;
    } else if (g == GapLabel::Eob) {
      eol_in_block = false;
    }
  }
  return true;
}

Reannotation reannotate(std::vector<AnnotatedSentence> corpus, const LinearSegmenterModel& base,
                        const LinearSegmenterModel& tuned, const ConstraintProfile& profile,
                        const ReannotateConfig& config) {
  Reannotation out;
  out.model = tuned;
  std::vector<AnnotatedSentence> pool;
  for (const auto& s : corpus)
    if (s.has_eol()) pool.push_back(s);

  for (std::size_t it = 1; it <= config.iterations; ++it) {
    IterationReport report;
    report.iteration = it;
    report.conformity_before = conformity_stats(corpus, profile).line_conformity();

    std::vector<std::size_t> selected;
    std::vector<AnnotatedSentence> inputs;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (check_cpl(corpus[i], profile).conforming) continue;
      selected.push_back(i);
      inputs.push_back(corpus[i]);
    }
    report.reannotated = selected.size();

    const auto outputs =
        segment_learned_batch(out.model, inputs, profile, {SegmentMode::EolOnly, config.beam});
    for (std::size_t k = 0; k < selected.size(); ++k) {
      if (!accept_reannotation(outputs[k], profile)) continue;
      corpus[selected[k]] = outputs[k];
      pool.push_back(outputs[k]);
      ++report.accepted;
    }
    report.conformity_after = conformity_stats(corpus, profile).line_conformity();
    report.pool_size = pool.size();
    if (report.accepted == 0) {
      out.reports.push_back(report);
      break;
    }
    out.model = fine_tune(base, pool, config.fine_tune, profile);
    out.reports.push_back(report);
  }
  out.corpus = std::move(corpus);
  return out;
}

std::string CorpusStats::to_json() const {
  nlohmann::ordered_json j;
  j["sentences"] = sentences;
  j["words"] = words;
  j["eol_fraction"] = eol_fraction;
  j["conformity"] = nlohmann::ordered_json::parse(conformity.to_json());
  if (total_duration) j["total_duration"] = *total_duration;
  if (mean_cps) j["mean_cps"] = *mean_cps;
  return j.dump(2);
}

std::string CorpusStats::to_text() const {
  std::ostringstream os;
  os << "sentences\t" << sentences << '\n' << "words\t" << words << '\n'
     << "eol_fraction\t" << eol_fraction << '\n';
  os << conformity.to_text();
  if (total_duration) os << "total_duration\t" << *total_duration << '\n';
  if (mean_cps) os << "mean_cps\t" << *mean_cps << '\n';
  return os.str();
}

CorpusStats stats(const std::vector<AnnotatedSentence>& corpus, const ConstraintProfile& profile,
                  const std::vector<SegmentDuration>* metadata) {
  CorpusStats st;
  st.sentences = corpus.size();
  for (const auto& s : corpus) st.words += s.size();
  st.conformity = conformity_stats(corpus, profile);
  st.eol_fraction = corpus.empty() ? 0.0
                                   : static_cast<double>(st.conformity.sentences_with_eol) /
                                         static_cast<double>(corpus.size());
  if (metadata) {
    if (metadata->size() != corpus.size())
      throw Error("metadata has " + std::to_string(metadata->size()) + " entries for " +
                  std::to_string(corpus.size()) + " sentences");
    double total = 0.0, cps = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      total += (*metadata)[i].duration;
      cps += check_cps(corpus[i], (*metadata)[i], profile).cps;
    }
    st.total_duration = total;
    st.mean_cps = corpus.empty() ? 0.0 : cps / static_cast<double>(corpus.size());
  }
  return st;
}

std::vector<AnnotatedSentence> parse_corpus(std::string_view text) {
  std::vector<AnnotatedSentence> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (trim(line).empty()) continue;
    try {
      out.push_back(AnnotatedSentence::parse(line));
    } catch (const GrammarViolation& e) {
      throw GrammarViolation("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string format_corpus(const std::vector<AnnotatedSentence>& corpus) {
  std::string out;
  for (const auto& s : corpus) {
    out += s.to_string();
    out.push_back('\n');
  }
  return out;
}

}  // namespace subseg
