// Copyright 2026 The kelp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "kelp/corpus.hpp"
#include "kelp/error.hpp"
#include "testutil.hpp"

using namespace kelp;
using test::make_song;

namespace {

const char* kTwoByTwo = R"([{
  "song_id": "s1", "artist": "a", "track": "t", "genre": "kpop",
  "translation_status": "official", "original_language": "kr",
  "sections": [
    {"lines": [{"en": "one", "kr": "하나"}, {"en": "two", "kr": "둘"}]},
    {"lines": [{"en": "three", "kr": "셋"}, {"en": "four", "kr": "넷"}]}
  ]}])";

bool songs_equal(const AlignedSong& a, const AlignedSong& b) {
  if (a.song_id != b.song_id || a.artist != b.artist || a.track != b.track ||
      a.genre != b.genre || a.translation_status != b.translation_status ||
      a.original_language != b.original_language ||
      a.sections.size() != b.sections.size()) {
    return false;
  }
  for (std::size_t s = 0; s < a.sections.size(); ++s) {
    if (a.sections[s].section_index != b.sections[s].section_index) return false;
    if (a.sections[s].lines.size() != b.sections[s].lines.size()) return false;
    for (std::size_t l = 0; l < a.sections[s].lines.size(); ++l) {
      const auto& la = a.sections[s].lines[l];
      const auto& lb = b.sections[s].lines[l];
      if (la.en != lb.en || la.kr != lb.kr || la.line_index != lb.line_index) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("parse two sections by two lines") {
  auto corpus = parse_corpus(std::string_view(kTwoByTwo));
  REQUIRE(corpus.size() == 1);
  const AlignedSong& song = corpus[0];
  CHECK(song.section_count() == 2);
  CHECK(song.line_count() == 4);
  CHECK(song.sections[0].section_index == 1);
  CHECK(song.sections[1].section_index == 2);
  CHECK(song.sections[1].lines[0].line_index == 3);
  CHECK(song.genre == Genre::kpop);
}

TEST_CASE("one-sided line is an alignment error naming its section") {
  const char* one_sided = R"([{
    "song_id": "s2", "artist": "a", "track": "t", "genre": "other",
    "translation_status": "official", "original_language": "kr",
    "sections": [
      {"lines": [{"en": "fine", "kr": "좋아"}]},
      {"lines": [{"en": "english only", "kr": ""}]}
    ]}])";
  try {
    parse_corpus(std::string_view(one_sided));
    FAIL("expected AlignmentError");
  } catch (const AlignmentError& e) {
    CHECK(e.song_id() == "s2");
    CHECK(e.section_index() == 2);
    CHECK(std::string(e.what()).find("non-empty-line") != std::string::npos);
  }
}

TEST_CASE("table-1 shaped fixture parses to 2 sections and 8 lines") {
  auto corpus = test::load_fixture_corpus("cry_for_me_excerpt.json");
  REQUIRE(corpus.size() == 1);
  const AlignedSong& song = corpus[0];
  CHECK(song.section_count() == 2);
  CHECK(song.line_count() == 8);
  CHECK(song.sections[0].lines[0].en == "You don't know me");
  CHECK(song.sections[0].lines[0].en == song.sections[0].lines[0].kr);
}

TEST_CASE("malformed json carries a byte offset") {
  try {
    parse_corpus(std::string_view("[{\"song_id\": }]"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.byte_offset() > 0);
  }
}

TEST_CASE("missing required key is a schema error with a field path") {
  const char* missing_kr = R"([{
    "song_id": "s3", "artist": "a", "track": "t", "genre": "other",
    "translation_status": "official", "original_language": "kr",
    "sections": [{"lines": [{"en": "only english"}]}]}])";
  try {
    parse_corpus(std::string_view(missing_kr));
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.field_path().find("sections[0].lines[0].kr") != std::string::npos);
  }
}

TEST_CASE("unknown genre is a schema error") {
  const char* bad_genre = R"([{
    "song_id": "s4", "artist": "a", "track": "t", "genre": "jazz",
    "translation_status": "official", "original_language": "kr",
    "sections": [{"lines": [{"en": "x", "kr": "y"}]}]}])";
  CHECK_THROWS_AS(parse_corpus(std::string_view(bad_genre)), SchemaError);
}

TEST_CASE("jsonl input parses one song per line") {
  std::string jsonl;
  const char* song = R"({"song_id":"%ID%","artist":"a","track":"t","genre":"kpop",
    "translation_status":"official","original_language":"kr",
    "sections":[{"lines":[{"en":"hi","kr":"안녕"}]}]})";
  for (const char* id : {"a1", "a2"}) {
    std::string record = song;
    record.replace(record.find("%ID%"), 4, id);
    // JSONL records must be one line each.
    std::string flat;
    for (char c : record) {
      if (c != '\n') flat += c;
    }
    jsonl += flat + "\n\n";
  }
  auto corpus = parse_corpus(std::string_view(jsonl));
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].song_id == "a1");
  CHECK(corpus[1].song_id == "a2");
}

TEST_CASE("text is NFC-normalized on load") {
  // kr carries decomposed jamo for HAN; after load it must equal the block.
  const char* decomposed = R"([{
    "song_id": "s5", "artist": "a", "track": "t", "genre": "other",
    "translation_status": "official", "original_language": "kr",
    "sections": [{"lines": [{"en": "han", "kr": "한"}]}]}])";
  auto corpus = parse_corpus(std::string_view(decomposed));
  CHECK(corpus[0].sections[0].lines[0].kr == "한");
}

TEST_CASE("validate_alignment on a clean song returns nothing") {
  auto song = make_song({{{"a", "가"}, {"b", "나"}}, {{"c", "다"}}});
  CHECK(validate_alignment(song).empty());
}

TEST_CASE("validate_alignment flags empty kr text with its line") {
  auto song = make_song({{{"a", "가"}, {"b", "나"}}, {{"c", "  "}}});
  auto violations = validate_alignment(song);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule == "non-empty-line");
  CHECK(violations[0].line_index == 3);
  CHECK(violations[0].section_index == 2);
}

TEST_CASE("validate_alignment flags non-contiguous section indices") {
  auto song = make_song({{{"a", "가"}}, {{"b", "나"}}});
  song.sections[1].section_index = 3;
  auto violations = validate_alignment(song);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule == "contiguous-sections");
}

TEST_CASE("validate_alignment flags empty sections and line index gaps") {
  auto song = make_song({{{"a", "가"}, {"b", "나"}}});
  song.sections.push_back(Section{2, {}});
  auto violations = validate_alignment(song);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule == "non-empty-section");

  auto gappy = make_song({{{"a", "가"}, {"b", "나"}}});
  gappy.sections[0].lines[1].line_index = 5;
  violations = validate_alignment(gappy);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule == "contiguous-lines");
}

TEST_CASE("corpus_stats of an empty corpus is all zero") {
  CorpusStats st = corpus_stats({});
  CHECK(st.songs == 0);
  CHECK(st.total_sections == 0);
  CHECK(st.total_lines == 0);
  CHECK(st.unique_lines_en == 0);
  CHECK(st.vocab_en == 0);
}

TEST_CASE("corpus_stats counts shared sections once") {
  // Two songs share one identical section; 4 sections total, 3 unique.
  auto a = make_song({{{"same line one", "같은 줄 하나"}, {"same line two", "같은 줄 둘"}},
                      {{"only in a", "에이에만"}}},
                     "a");
  auto b = make_song({{{"same line one", "같은 줄 하나"}, {"same line two", "같은 줄 둘"}},
                      {{"only in b", "비에만"}}},
                     "b");
  CorpusStats st = corpus_stats({a, b});
  CHECK(st.songs == 2);
  CHECK(st.total_sections == 4);
  CHECK(st.unique_sections_en == 3);
  CHECK(st.unique_sections_kr == 3);
  CHECK(st.total_lines == 6);
  CHECK(st.unique_lines_en == 4);
  // vocab: same, line, one, two, only, in, a, b
  CHECK(st.vocab_en == 8);
}

TEST_CASE("corpus_stats uniqueness uses NFC plus trimming") {
  auto a = make_song({{{"word", "한"}}}, "a");   // decomposed HAN
  auto b = make_song({{{"word  ", "한"}}}, "b");                 // precomposed, padded
  CorpusStats st = corpus_stats({a, b});
  CHECK(st.unique_lines_kr == 1);
  CHECK(st.unique_lines_en == 1);
}

TEST_CASE("round trip: parse(serialize) is identity on random songs") {
  std::mt19937_64 rng(20260809);
  for (int i = 0; i < 50; ++i) {
    AlignedSong song = test::random_song(rng, "rt-" + std::to_string(i));
    auto reparsed = parse_corpus(std::string_view("[" + serialize_song(song) + "]"));
    REQUIRE(reparsed.size() == 1);
    CHECK(songs_equal(song, reparsed[0]));
    // Twice: serialize(parse(serialize)) must match byte for byte.
    CHECK(serialize_song(reparsed[0]) == serialize_song(song));
  }
}

TEST_CASE("serialize_corpus emits both container forms") {
  auto corpus = parse_corpus(std::string_view(kTwoByTwo));
  std::ostringstream arr, jsonl;
  serialize_corpus(corpus, arr, false);
  serialize_corpus(corpus, jsonl, true);
  CHECK(parse_corpus(std::string_view(arr.str())).size() == 1);
  CHECK(parse_corpus(std::string_view(jsonl.str())).size() == 1);
}

TEST_CASE("line count equals the sum over sections on random songs") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    AlignedSong song = test::random_song(rng, "sum-" + std::to_string(i));
    int sum = 0;
    for (const auto& sec : song.sections) sum += static_cast<int>(sec.lines.size());
    CHECK(song.line_count() == sum);
  }
}

TEST_CASE("valid songs reserialize without alignment errors and invalid ones do not") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 50; ++i) {
    AlignedSong song = test::random_song(rng, "rv-" + std::to_string(i));
    const bool clean = validate_alignment(song).empty();
    REQUIRE(clean);
    CHECK_NOTHROW(parse_corpus(std::string_view("[" + serialize_song(song) + "]")));
  }
  AlignedSong bad = make_song({{{"x", ""}}});
  REQUIRE_FALSE(validate_alignment(bad).empty());
  CHECK_THROWS_AS(parse_corpus(std::string_view("[" + serialize_song(bad) + "]")),
                  AlignmentError);
}
