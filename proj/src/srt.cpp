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

#include "subseg/srt.hpp"

#include <charconv>
#include <cstdio>

#include "subseg/error.hpp"
#include "subseg/text.hpp"

namespace subseg {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

int two_digits(std::string_view s, std::size_t at) {
  return (s[at] - '0') * 10 + (s[at + 1] - '0');
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

bool parse_index(std::string_view s, std::uint64_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && out > 0;
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  // HH:MM:SS,mmm
  if (text.size() != 12 || text[2] != ':' || text[5] != ':' || text[8] != ',')
    throw MalformedTimestamp(std::string(text));
  for (std::size_t i : {0, 1, 3, 4, 6, 7, 9, 10, 11})
    if (!is_digit(text[i])) throw MalformedTimestamp(std::string(text));
  const int hh = two_digits(text, 0);
  const int mm = two_digits(text, 3);
  const int ss = two_digits(text, 6);
  const int ms = (text[9] - '0') * 100 + two_digits(text, 10);
  if (mm >= 60 || ss >= 60) throw MalformedTimestamp(std::string(text));
  return Timestamp{((static_cast<std::int64_t>(hh) * 60 + mm) * 60 + ss) * 1000 + ms};
}

std::string format_timestamp(Timestamp ts) {
  std::int64_t ms = ts.millis;
  const auto h = ms / 3600000;
  ms %= 3600000;
  const auto m = ms / 60000;
  ms %= 60000;
  const auto s = ms / 1000;
  ms %= 1000;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld,%03lld", static_cast<long long>(h),
                static_cast<long long>(m), static_cast<long long>(s),
                static_cast<long long>(ms));
  return buf;
}

SubtitleDocument parse_srt(std::string_view text, std::vector<SrtWarning>* warnings) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  const auto lines = split_lines(text);

  SubtitleDocument doc;
  std::size_t i = 0;
  std::size_t block = 0;
  while (i < lines.size()) {
    if (trim(lines[i]).empty()) {
      ++i;
      continue;
    }
    ++block;
    Subtitle cue;
    if (!parse_index(lines[i], cue.index)) throw MalformedCue(block, "expected a positive cue index");
    ++i;
    if (i >= lines.size()) throw MalformedCue(block, "missing timing line");
    std::string_view timing = trim(lines[i]);
    const auto arrow = timing.find("-->");
    if (arrow == std::string_view::npos) throw MalformedCue(block, "missing timing line");
    std::string_view lhs = trim(timing.substr(0, arrow));
    std::string_view rhs = trim(timing.substr(arrow + 3));
    // Anything after the end timestamp (stray numbers, positions) is ignored.
    if (const auto blank = rhs.find_first_of(" \t"); blank != std::string_view::npos)
      rhs = rhs.substr(0, blank);
    cue.start = parse_timestamp(lhs);
    cue.end = parse_timestamp(rhs);
    if (cue.end <= cue.start) throw MalformedCue(block, "end timestamp not after start");
    ++i;
    while (i < lines.size()) {
      std::string_view line = trim_right(lines[i]);
      if (line.empty()) break;
      cue.lines.emplace_back(line);
      ++i;
    }
    if (cue.lines.empty()) throw MalformedCue(block, "empty subtitle text");

    if (!doc.subtitles.empty() && warnings) {
      const Subtitle& prev = doc.subtitles.back();
      if (cue.start < prev.start)
        warnings->push_back({block, "cue starts before the previous cue"});
      if (cue.index <= prev.index)
        warnings->push_back({block, "cue index does not increase"});
    }
    doc.subtitles.push_back(std::move(cue));
  }
  return doc;
}

std::string serialize_srt(const SubtitleDocument& doc) {
  std::string out;
  for (std::size_t k = 0; k < doc.subtitles.size(); ++k) {
    const Subtitle& cue = doc.subtitles[k];
    if (k) out.push_back('\n');
    out += std::to_string(cue.index);
    out.push_back('\n');
    out += format_timestamp(cue.start);
    out += " --> ";
    out += format_timestamp(cue.end);
    out.push_back('\n');
    for (const auto& line : cue.lines) {
      out += line;
      out.push_back('\n');
    }
  }
  if (!doc.subtitles.empty()) out.push_back('\n');
  return out;
}

}  // namespace subseg
