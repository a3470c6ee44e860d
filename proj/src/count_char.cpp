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

#include "subseg/error.hpp"
#include "subseg/rng.hpp"
#include "subseg/segmenters.hpp"
#include "subseg/text.hpp"

namespace subseg {

AnnotatedSentence segment_count_char(std::string_view sentence, const ConstraintProfile& profile,
                                     std::uint64_t seed) {
  auto words = split_words(sentence);
  std::vector<GapLabel> gaps(words.size(), GapLabel::None);
  if (words.empty()) return AnnotatedSentence(std::move(words), std::move(gaps));

  CounterRng rng(seed);
  GapLabel prev = GapLabel::Eob;  // a sentence opens a fresh block
  std::size_t line = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t len = char_count(words[i]);
    if (len > profile.cpl_limit) throw WordTooLong(words[i]);
    if (line > 0 && line + 1 + len > profile.cpl_limit) {
      const GapLabel kind =
          prev == GapLabel::Eol ? GapLabel::Eob : (rng.coin() ? GapLabel::Eol : GapLabel::Eob);
      gaps[i - 1] = kind;
      prev = kind;
      line = 0;
    }
    line = line == 0 ? len : line + 1 + len;
  }
  gaps.back() = GapLabel::Eob;
  // With one EOL per block at most, forcing the final EOB cannot create a
  // third line; promote the preceding EOL should a violation ever appear.
  AnnotatedSentence out(std::move(words), std::move(gaps));
  if (!out.is_strict()) {
    for (std::size_t i = out.size() - 1; i-- > 0;) {
      if (out.gap(i) == GapLabel::Eol) {
        out.set_gap(i, GapLabel::Eob);
        break;
      }
    }
  }
  return out;
}

}  // namespace subseg
