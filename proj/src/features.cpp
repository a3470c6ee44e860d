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

#include <algorithm>
#include <cctype>

#include "feature_parts.hpp"
#include "subseg/text.hpp"

namespace subseg {
namespace detail {

namespace {

std::string lower(std::string_view w) {
  std::string out(w);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

char trailing_punct(std::string_view w) {
  if (w.empty()) return 0;
  const char c = w.back();
  return std::string_view(".,;:!?\"')").find(c) != std::string_view::npos ? c : 0;
}

std::string prev_name(GapLabel g) {
  switch (g) {
    case GapLabel::Eol: return "eol";
    case GapLabel::Eob: return "eob";
    case GapLabel::None: break;
  }
  return "none";
}

}  // namespace

std::size_t chars_after(const std::vector<std::string>& words, std::size_t gap) {
  std::size_t n = 0;
  for (std::size_t i = gap; i < words.size(); ++i) n += char_count(words[i]) + 1;
  return n == 0 ? 0 : n - 1;
}

void static_features(const std::vector<std::string>& words, std::size_t gap,
                     std::vector<std::string>& out) {
  const std::string& cur = words[gap - 1];
  const bool last = gap == words.size();
  const std::string next = last ? "</s>" : words[gap];
  const char punct = trailing_punct(cur);

  out.emplace_back("bias");
  out.push_back("w=" + lower(cur));
  out.push_back("nw=" + lower(next));
  out.push_back("wl=" + std::to_string(std::min<std::size_t>(char_count(cur), 12)));
  out.push_back("nwl=" + std::to_string(last ? 0 : std::min<std::size_t>(char_count(next), 12)));
  out.push_back(std::string("punct=") + (punct ? "1" : "0"));
  if (punct) out.push_back(std::string("pc=") + punct);
  if (!last && std::isupper(static_cast<unsigned char>(next[0]))) out.emplace_back("ncap");
  const std::size_t rem = chars_after(words, gap);
  out.push_back("rem=" + std::to_string(std::min<std::size_t>(rem / 6, 20)));
  out.push_back("pos=" + std::to_string(gap * 10 / words.size()));
  if (last) out.emplace_back("eos");
}

void state_features(const std::vector<std::string>& words, std::size_t gap,
                    std::size_t chars_since_break, GapLabel prev_break,
                    const ConstraintProfile& profile, std::vector<std::string>& out) {
  const bool last = gap == words.size();
  const std::size_t next_len = last ? 0 : char_count(words[gap]);
  const std::size_t cpl = profile.cpl_limit;
  const std::string csb = std::to_string(std::min(chars_since_break, cpl + 9) / 3);
  const std::string pb = prev_name(prev_break);
  const bool overflow = !last && chars_since_break + 1 + next_len > cpl;
  const bool over = chars_since_break > cpl;
  const std::string ovf = overflow ? "1" : "0";
  const char pc = trailing_punct(words[gap - 1]);
  const std::string punct = pc ? "1" : "0";
  const std::size_t rem = chars_after(words, gap);
  const std::string fits_rest = rem <= cpl ? "1" : "0";

  out.push_back("csb=" + csb);
  out.push_back("pb=" + pb);
  out.push_back("ovf=" + ovf);
  if (over) out.emplace_back("over");
  out.push_back("pb&ovf=" + pb + ovf);
  out.push_back("pb&punct=" + pb + punct);
  if (pc) out.push_back("pb&pc=" + pb + pc);
  out.push_back("pb&csb=" + pb + csb);
  out.push_back("punct&csb=" + punct + csb);
  out.push_back("ovf&punct=" + ovf + punct);
  out.push_back("pb&rest=" + pb + fits_rest + ovf);
}

}  // namespace detail

std::vector<std::string> extract_features(const std::vector<std::string>& words, std::size_t gap,
                                          std::size_t chars_since_break, GapLabel prev_break,
                                          const ConstraintProfile& profile) {
  std::vector<std::string> out;
  if (gap < 1 || gap > words.size()) return out;
  detail::static_features(words, gap, out);
  detail::state_features(words, gap, chars_since_break, prev_break, profile, out);
  return out;
}

}  // namespace subseg
