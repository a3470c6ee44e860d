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

#include "subseg/align.hpp"

#include <set>
#include <utility>

#include "subseg/error.hpp"
#include "subseg/text.hpp"

namespace subseg {

InvertedIndex::InvertedIndex(const std::vector<SubtitleDocument>& docs) {
  for (const auto& doc : docs) {
    auto [it, inserted] = talks_.try_emplace(doc.talk_id);
    if (!inserted) throw DuplicateTalkId(doc.talk_id);
    Talk& talk = it->second;
    for (const auto& cue : doc.subtitles) {
      Entry e;
      e.cue = cue;
      for (const auto& line : cue.lines) {
        auto norm = normalize_whitespace(line);
        if (!norm.empty()) e.lines.push_back(std::move(norm));
      }
      e.key = join_words(e.lines);
      if (!e.key.empty()) {
        const auto first = e.key.substr(0, e.key.find(' '));
        talk.by_first_word[first].push_back(talk.entries.size());
      }
      talk.entries.push_back(std::move(e));
      ++size_;
    }
  }
}

const std::vector<InvertedIndex::Entry>& InvertedIndex::talk(const std::string& talk_id) const {
  static const std::vector<Entry> none;
  auto it = talks_.find(talk_id);
  return it == talks_.end() ? none : it->second.entries;
}

const std::vector<std::size_t>& InvertedIndex::starting_with(const std::string& talk_id,
                                                             const std::string& word) const {
  static const std::vector<std::size_t> none;
  auto it = talks_.find(talk_id);
  if (it == talks_.end()) return none;
  auto w = it->second.by_first_word.find(word);
  return w == it->second.by_first_word.end() ? none : w->second;
}

InvertedIndex build_index(const std::vector<SubtitleDocument>& docs) { return InvertedIndex(docs); }

namespace {

constexpr std::size_t kNoCue = static_cast<std::size_t>(-1);

struct Tiler {
  const std::string& text;
  const std::vector<InvertedIndex::Entry>& entries;
  // matches[p]: cues (in index order) whose key occurs at char offset p on word boundaries
  std::vector<std::vector<std::size_t>> matches;
  std::set<std::pair<std::size_t, std::size_t>> dead;
  std::vector<std::size_t> chosen;

  bool solve(std::size_t pos, std::size_t last) {
    if (pos == text.size()) return true;
    if (dead.count({pos, last})) return false;
    for (std::size_t cue : matches[pos]) {
      if (last != kNoCue && cue <= last) continue;
      std::size_t next = pos + entries[cue].key.size();
      if (next < text.size()) ++next;  // the separating space
      chosen.push_back(cue);
      if (solve(next, cue)) return true;
      chosen.pop_back();
    }
    dead.insert({pos, last});
    return false;
  }
};

}  // namespace

AnnotatedSentence align_sentence(std::string_view sentence, const std::string& talk_id,
                                 const InvertedIndex& index) {
  const std::string text = normalize_whitespace(sentence);
  if (text.empty()) throw NoAlignment("empty sentence");
  const auto& entries = index.talk(talk_id);
  if (entries.empty()) throw NoAlignment("no subtitles for talk '" + talk_id + "'");

  Tiler tiler{text, entries, std::vector<std::vector<std::size_t>>(text.size() + 1), {}, {}};
  bool any = false;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t end = text.find(' ', pos);
    if (end == std::string::npos) end = text.size();
    const std::string word = text.substr(pos, end - pos);
    for (std::size_t cue : index.starting_with(talk_id, word)) {
      const std::string& key = entries[cue].key;
      const std::size_t stop = pos + key.size();
      if (stop > text.size() || text.compare(pos, key.size(), key) != 0) continue;
      if (stop < text.size() && text[stop] != ' ') continue;
      tiler.matches[pos].push_back(cue);
      any = true;
    }
    pos = end + 1;
  }
  if (!any) throw NoAlignment("no subtitle of talk '" + talk_id + "' is contained in the sentence");
  if (!tiler.solve(0, kNoCue))
    throw NoAlignment("contained subtitles do not tile the sentence");

  std::vector<std::string> words;
  std::vector<GapLabel> gaps;
  for (std::size_t cue : tiler.chosen) {
    const auto& lines = entries[cue].lines;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      for (auto& w : split_words(lines[l])) {
        words.push_back(std::move(w));
        gaps.push_back(GapLabel::None);
      }
      gaps.back() = l + 1 == lines.size() ? GapLabel::Eob : GapLabel::Eol;
    }
  }
  return AnnotatedSentence(std::move(words), std::move(gaps));
}

}  // namespace subseg
