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

#include <charconv>
#include <string>

#include <yaml-cpp/yaml.h>

#include "subseg/error.hpp"
#include "subseg/srt.hpp"

namespace subseg {

namespace {

std::size_t line_of(const YAML::Node& node) {
  return static_cast<std::size_t>(node.Mark().line + 1);
}

double read_seconds(const YAML::Node& entry, const char* key) {
  const YAML::Node value = entry[key];
  if (!value) throw MalformedMetadata(line_of(entry), std::string("missing key '") + key + "'");
  const std::string raw = value.as<std::string>();
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), out);
  if (ec != std::errc() || ptr != raw.data() + raw.size())
    throw MalformedMetadata(line_of(entry), std::string("non-numeric '") + key + "': " + raw);
  return out;
}

}  // namespace

std::vector<SegmentDuration> load_segments_metadata(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw MalformedMetadata(static_cast<std::size_t>(e.mark.line + 1), e.msg);
  }
  std::vector<SegmentDuration> out;
  if (root.IsNull()) return out;
  if (!root.IsSequence()) throw MalformedMetadata(1, "expected a list of mappings");
  out.reserve(root.size());
  for (const YAML::Node& entry : root) {
    if (!entry.IsMap()) throw MalformedMetadata(line_of(entry), "expected a mapping");
    SegmentDuration seg;
    if (entry["wav"])
      seg.audio_id = entry["wav"].as<std::string>();
    else if (entry["audio"])
      seg.audio_id = entry["audio"].as<std::string>();
    else
      throw MalformedMetadata(line_of(entry), "missing key 'wav'");
    seg.offset = read_seconds(entry, "offset");
    seg.duration = read_seconds(entry, "duration");
    if (seg.offset < 0) throw MalformedMetadata(line_of(entry), "negative offset");
    if (!(seg.duration > 0)) throw MalformedMetadata(line_of(entry), "duration must be positive");
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace subseg
