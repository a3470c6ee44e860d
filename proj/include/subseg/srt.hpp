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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subseg {

/// Milliseconds since the start of the video.
struct Timestamp {
  std::int64_t millis = 0;

  friend bool operator==(const Timestamp&, const Timestamp&) = default;
  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

/// Largest value representable as HH:MM:SS,mmm.
inline constexpr std::int64_t kMaxTimestampMillis = ((99LL * 60 + 59) * 60 + 59) * 1000 + 999;

/// Parses `HH:MM:SS,mmm`. Throws MalformedTimestamp on any deviation.
Timestamp parse_timestamp(std::string_view text);

/// Formats as zero-padded `HH:MM:SS,mmm`.
std::string format_timestamp(Timestamp ts);

/// One timed cue block.
struct Subtitle {
  std::uint64_t index = 1;
  Timestamp start;
  Timestamp end;
  std::vector<std::string> lines;

  friend bool operator==(const Subtitle&, const Subtitle&) = default;
};

struct SubtitleDocument {
  std::string talk_id;
  std::vector<Subtitle> subtitles;

  friend bool operator==(const SubtitleDocument&, const SubtitleDocument&) = default;
};

/// Non-fatal finding collected while parsing (e.g. out-of-order cues).
struct SrtWarning {
  std::size_t block_number;
  std::string message;
};

/// Parses SubRip text. A leading UTF-8 BOM is dropped, CRLF is accepted,
/// trailing whitespace on text lines is stripped and anything after the end
/// timestamp on a timing line is ignored. Cues whose start precedes the
/// previous cue, or whose index does not increase, are kept and reported
/// through `warnings` when given.
SubtitleDocument parse_srt(std::string_view text, std::vector<SrtWarning>* warnings = nullptr);

/// Canonical SubRip text; parse_srt(serialize_srt(d)) == d.
std::string serialize_srt(const SubtitleDocument& doc);

/// Per-sentence audio window from the corpus metadata sidecar.
struct SegmentDuration {
  std::string audio_id;
  double offset = 0.0;
  double duration = 0.0;

  friend bool operator==(const SegmentDuration&, const SegmentDuration&) = default;
};

/// Reads a YAML list of flow mappings (`- {duration: .., offset: .., wav: ..}`).
/// `audio` is accepted in place of `wav`; other keys are ignored.
std::vector<SegmentDuration> load_segments_metadata(std::string_view text);

}  // namespace subseg
