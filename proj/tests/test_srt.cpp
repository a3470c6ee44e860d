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

#include "subseg/error.hpp"
#include "subseg/pipeline.hpp"
#include "subseg/rng.hpp"
#include "subseg/srt.hpp"

using namespace subseg;

TEST_CASE("parse_timestamp") {
  CHECK(parse_timestamp("00:08:57,020").millis == 537020);
  CHECK(parse_timestamp("00:00:00,000").millis == 0);
  CHECK(parse_timestamp("01:02:03,004").millis == 3723004);
  CHECK(parse_timestamp("99:59:59,999").millis == kMaxTimestampMillis);

  for (const char* bad : {"0:08:57,020", "00:08:57.020", "00:60:00,000", "00:00:60,000", "00:00:00,00",
                          "00:00:00,0000", "aa:00:00,000", "", "00-00-00,000"})
    CHECK_THROWS_AS(parse_timestamp(bad), MalformedTimestamp);
}

TEST_CASE("timestamp round trip") {
  CounterRng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Timestamp ts{static_cast<std::int64_t>(rng.below(kMaxTimestampMillis + 1))};
    const auto text = format_timestamp(ts);
    CHECK(text.size() == 12);
    CHECK(parse_timestamp(text) == ts);
    CHECK(format_timestamp(parse_timestamp(text)) == text);
  }
  CHECK(format_timestamp(Timestamp{537020}) == "00:08:57,020");
}

TEST_CASE("parse the two-cue talk fragment") {
  const auto doc = parse_srt(read_file(SUBSEG_TEST_DATA "/ted_1096.srt"));
  REQUIRE(doc.subtitles.size() == 2);
  CHECK(doc.subtitles[0] == Subtitle{164, {537020}, {538476}, {"I wanted to challenge the idea"}});
  CHECK(doc.subtitles[1] ==
        Subtitle{165, {538500}, {542060}, {"that design is but a tool", "to create function and beauty."}});
}

TEST_CASE("parse_srt edge cases") {
  CHECK(parse_srt("").subtitles.empty());
  CHECK(parse_srt("\n\n  \n").subtitles.empty());

  SUBCASE("BOM and CRLF") {
    const auto doc = parse_srt("\xEF\xBB\xBF" "1\r\n00:00:01,000 --> 00:00:02,000\r\nhello\r\n\r\n");
    REQUIRE(doc.subtitles.size() == 1);
    CHECK(doc.subtitles[0].lines == std::vector<std::string>{"hello"});
  }
  SUBCASE("double spaces survive") {
    const auto doc = parse_srt("1\n00:00:01,000 --> 00:00:02,000\na tool  to create\n");
    CHECK(doc.subtitles[0].lines[0] == "a tool  to create");
    CHECK(parse_srt(serialize_srt(doc)) == doc);
  }
  SUBCASE("missing timing line") {
    try {
      parse_srt("1\n00:00:01,000 --> 00:00:02,000\nok\n\n2\nno timing here\n");
      FAIL("expected MalformedCue");
    } catch (const MalformedCue& e) {
      CHECK(e.block_number() == 2);
    }
  }
  SUBCASE("empty text") {
    CHECK_THROWS_AS(parse_srt("1\n00:00:01,000 --> 00:00:02,000\n\n"), MalformedCue);
  }
  SUBCASE("bad timestamp propagates") {
    CHECK_THROWS_AS(parse_srt("1\n00:00:01.000 --> 00:00:02,000\nx\n"), MalformedTimestamp);
  }
  SUBCASE("end before start") {
    CHECK_THROWS_AS(parse_srt("1\n00:00:03,000 --> 00:00:02,000\nx\n"), MalformedCue);
  }
  SUBCASE("non-monotonic timing is a warning") {
    std::vector<SrtWarning> warnings;
    const auto doc = parse_srt(
        "2\n00:00:05,000 --> 00:00:06,000\nb\n\n1\n00:00:01,000 --> 00:00:02,000\na\n", &warnings);
    CHECK(doc.subtitles.size() == 2);
    REQUIRE(warnings.size() == 2);
    CHECK(warnings[0].block_number == 2);
  }
}

TEST_CASE("serialize_srt") {
  SubtitleDocument doc;
  CHECK(serialize_srt(doc) == "");
  doc.subtitles.push_back({164, {537020}, {538476}, {"I wanted to challenge the idea"}});
  CHECK(serialize_srt(doc) == "164\n00:08:57,020 --> 00:08:58,476\nI wanted to challenge the idea\n\n");
}

TEST_CASE("srt round trip over generated documents") {
  CounterRng rng(11);
  const char* words[] = {"a", "tool", "design", "l'idée", "über", "beauty.", "-", "42", "x,y"};
  for (int trial = 0; trial < 300; ++trial) {
    SubtitleDocument doc;
    std::int64_t t = static_cast<std::int64_t>(rng.below(100000));
    std::uint64_t index = 1 + rng.below(5);
    const auto cues = rng.below(8);
    for (std::uint64_t c = 0; c < cues; ++c) {
      Subtitle cue;
      cue.index = index;
      index += 1 + rng.below(2);
      cue.start = {t};
      t += 1 + static_cast<std::int64_t>(rng.below(5000));
      cue.end = {t};
      const auto n_lines = 1 + rng.below(3);
      for (std::uint64_t l = 0; l < n_lines; ++l) {
        std::string line;
        const auto n_words = 1 + rng.below(6);
        for (std::uint64_t w = 0; w < n_words; ++w) {
          if (w) line += rng.below(5) == 0 ? "  " : " ";
          line += words[rng.below(std::size(words))];
        }
        cue.lines.push_back(line);
      }
      doc.subtitles.push_back(cue);
    }
    const auto text = serialize_srt(doc);
    const auto back = parse_srt(text);
    CHECK(back == doc);
    CHECK(serialize_srt(back) == text);
  }
}

TEST_CASE("parser is total over fuzzed input") {
  CounterRng rng(5);
  const std::string alphabet = "0123456789:,-> \nab\r";
  const std::string seed_text = serialize_srt(parse_srt(read_file(SUBSEG_TEST_DATA "/ted_1096.srt")));
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text = seed_text;
    const auto edits = 1 + rng.below(6);
    for (std::uint64_t e = 0; e < edits; ++e) {
      const auto pos = rng.below(text.size());
      switch (rng.below(3)) {
        case 0: text[pos] = alphabet[rng.below(alphabet.size())]; break;
        case 1: text.erase(pos, 1); break;
        default: text.insert(pos, 1, alphabet[rng.below(alphabet.size())]);
      }
    }
    try {
      const auto doc = parse_srt(text);
      for (const auto& cue : doc.subtitles) {
        CHECK(cue.start < cue.end);
        CHECK(!cue.lines.empty());
      }
    } catch (const Error&) {
      // a located error is an acceptable outcome
    }
  }
}

TEST_CASE("load_segments_metadata") {
  const auto one = load_segments_metadata("- {duration: 1.456, offset: 537.02, wav: talk1.wav}\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0] == SegmentDuration{"talk1.wav", 537.02, 1.456});
  CHECK(one[0].duration == doctest::Approx((538476 - 537020) / 1000.0));

  CHECK(load_segments_metadata("[]").empty());
  CHECK(load_segments_metadata("").empty());

  const auto two = load_segments_metadata(
      "- {duration: 3.5, offset: 10.0, speaker_id: spk.1, wav: ted_1.wav}\n"
      "- {audio: ted_2.wav, duration: 2, offset: 0}\n");
  REQUIRE(two.size() == 2);
  CHECK(two[0].audio_id == "ted_1.wav");
  CHECK(two[1] == SegmentDuration{"ted_2.wav", 0.0, 2.0});

  try {
    load_segments_metadata("- {duration: 1, offset: 0, wav: a.wav}\n- {offset: 2, wav: b.wav}\n");
    FAIL("expected MalformedMetadata");
  } catch (const MalformedMetadata& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_segments_metadata("- {duration: abc, offset: 0, wav: a.wav}"), MalformedMetadata);
  CHECK_THROWS_AS(load_segments_metadata("- {duration: 0, offset: 0, wav: a.wav}"), MalformedMetadata);
  CHECK_THROWS_AS(load_segments_metadata("- {duration: 1, offset: 0}"), MalformedMetadata);
  CHECK_THROWS_AS(load_segments_metadata("- {duration: 1, offset: [0"), MalformedMetadata);
}
