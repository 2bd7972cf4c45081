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
#include "kelp/error.hpp"
#include "kelp/phonetics.hpp"
#include "testutil.hpp"

using namespace kelp;
using test::fixture_dict;

namespace {

std::vector<std::string> tokens_of(const PhonemeSequence& seq) { return seq.tokens; }

}  // namespace

TEST_CASE("jamo decomposition of anchor blocks") {
  auto sum = decompose_hangul(U'숨');
  REQUIRE(sum.has_value());
  CHECK(sum->initial == 9);      // ㅅ
  CHECK(sum->medial == 13);      // ㅜ
  CHECK(sum->final_index == 16); // ㅁ

  auto an = decompose_hangul(U'안');
  REQUIRE(an.has_value());
  CHECK(an->initial == 11);      // ㅇ (silent)
  CHECK(an->medial == 0);        // ㅏ
  CHECK(an->final_index == 4);   // ㄴ

  CHECK_FALSE(decompose_hangul(U'a').has_value());
  CHECK_FALSE(decompose_hangul(0xABFF).has_value());
}

TEST_CASE("jamo round trip over every precomposed block") {
  for (char32_t cp = 0xAC00; cp <= 0xD7A3; ++cp) {
    auto j = decompose_hangul(cp);
    REQUIRE(j.has_value());
    CHECK(compose_hangul(*j) == cp);
  }
}

TEST_CASE("korean phonemization anchors") {
  using V = std::vector<std::string>;
  CHECK(tokens_of(phonemize_korean("숨")) == V{"S", "U", "M", "<eos>"});
  CHECK(tokens_of(phonemize_korean("안")) == V{"A", "N", "<eos>"});
  CHECK(tokens_of(phonemize_korean("")) == V{"<eos>"});
  CHECK(phonemize_korean("숨").line_count == 1);
}

TEST_CASE("korean phonemization delegates latin runs to the english path") {
  const PronouncingDict* dict = &fixture_dict();
  auto seq = phonemize_korean("마지막엔 break your heart", dict);
  // One <eos> at the end only.
  int eos = 0;
  for (const auto& t : seq.tokens) {
    if (t == kEos) ++eos;
  }
  CHECK(eos == 1);
  CHECK(seq.tokens.back() == kEos);
  // The English tail is the dictionary pronunciation.
  std::vector<std::string> tail(seq.tokens.end() - 9, seq.tokens.end());
  CHECK(tail == std::vector<std::string>{"B", "R", "EY", "K", "Y", "AO", "R",
                                         "HH", "AA"} );
}

TEST_CASE("english phonemization anchors") {
  using V = std::vector<std::string>;
  const PronouncingDict* dict = &fixture_dict();
  CHECK(tokens_of(phonemize_english("change", dict)) == V{"CH", "EY", "N", "JH", "<eos>"});
  CHECK(tokens_of(phonemize_english("walking", dict)) == V{"W", "AO", "K", "IH", "NG", "<eos>"});
  CHECK(tokens_of(phonemize_english("", dict)) == V{"<eos>"});
  CHECK(tokens_of(phonemize_english("  ", dict)) == V{"<eos>"});
}

TEST_CASE("english phonemization is case and punctuation insensitive") {
  const PronouncingDict* dict = &fixture_dict();
  CHECK(tokens_of(phonemize_english("Change!", dict)) ==
        tokens_of(phonemize_english("change", dict)));
  CHECK(tokens_of(phonemize_english("don’t", dict)) ==
        tokens_of(phonemize_english("don't", dict)));
}

TEST_CASE("fully non-alphabetic tokens contribute no phonemes") {
  const PronouncingDict* dict = &fixture_dict();
  CHECK(tokens_of(phonemize_english("!!! ... ??", dict)) == std::vector<std::string>{"<eos>"});
}

TEST_CASE("letter-to-sound fallback is total and deterministic") {
  const PronouncingDict* dict = &fixture_dict();
  // Not a fixture word.
  REQUIRE(dict->lookup("BLORP") == nullptr);
  auto a = phonemize_english("blorp", dict);
  auto b = phonemize_english("blorp", dict);
  CHECK(a.tokens == b.tokens);
  CHECK(a.tokens.size() > 1);  // something besides <eos>
  // Pinned digraph behaviour.
  CHECK(tokens_of(phonemize_english("chimsh", dict)) ==
        std::vector<std::string>{"CH", "IH", "M", "SH", "<eos>"});
  CHECK(tokens_of(phonemize_english("quong", dict)) ==
        std::vector<std::string>{"K", "W", "AA", "NG", "<eos>"});
}

TEST_CASE("stress digits never survive phonemization") {
  const PronouncingDict* dict = &fixture_dict();
  std::mt19937_64 rng(11);
  std::vector<std::string> words;
  for (const auto& [w, p] : dict->entries()) {
    words.push_back(w);
    if (words.size() >= 400) break;
  }
  words.push_back("zzyzx");
  words.push_back("frobnicate");
  for (const auto& w : words) {
    for (const auto& tok : phonemize_english(w, dict).tokens) {
      CHECK(tok.find_first_of("0123456789") == std::string::npos);
    }
  }
}

TEST_CASE("pho is 1 when every bigram is distinct") {
  std::vector<PhonemeSequence> lines;
  PhonemeSequence seq;
  seq.tokens = {"AA", "B", "K", "D", "<eos>"};
  seq.line_count = 1;
  lines.push_back(seq);
  auto v = pho(lines);
  REQUIRE(v.has_value());
  CHECK(*v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pho of the worked na-na section is 4/9") {
  const PronouncingDict* dict = &fixture_dict();
  std::vector<PhonemeSequence> lines = {phonemize_english("na na", dict),
                                        phonemize_english("na na", dict)};
  REQUIRE(lines[0].tokens == std::vector<std::string>{"N", "AA", "N", "AA", "<eos>"});
  auto v = pho(lines);
  REQUIRE(v.has_value());
  CHECK(*v == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("sections with fewer than two tokens are unscored") {
  CHECK_FALSE(pho(std::vector<PhonemeSequence>{}).has_value());
  std::vector<PhonemeSequence> one_empty_line = {phonemize_english("")};
  CHECK_FALSE(pho(one_empty_line).has_value());
  // Two empty lines make a two-token stream: scored.
  std::vector<PhonemeSequence> two = {phonemize_english(""), phonemize_english("")};
  CHECK(pho(two).has_value());
}

TEST_CASE("pho matches the set-based oracle on random streams") {
  std::mt19937_64 rng(99);
  int scored = 0;
  for (int i = 0; i < 1000; ++i) {
    auto section = test::random_phoneme_section(rng);
    auto stream = test::concat_streams(section);
    auto v = pho(section);
    if (stream.size() < 2) {
      CHECK_FALSE(v.has_value());
      continue;
    }
    ++scored;
    REQUIRE(v.has_value());
    CHECK(*v == doctest::Approx(test::pho_oracle(stream)).epsilon(1e-15));
  }
  CHECK(scored > 900);
}

TEST_CASE("duplicating a section strictly lowers pho") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 200; ++i) {
    auto section = test::random_phoneme_section(rng);
    auto stream = test::concat_streams(section);
    if (stream.size() < 2) continue;
    auto doubled = section;
    doubled.insert(doubled.end(), section.begin(), section.end());
    auto v1 = pho(section);
    auto v2 = pho(doubled);
    REQUIRE(v1.has_value());
    REQUIRE(v2.has_value());
    CHECK(*v2 < *v1);
  }
}

TEST_CASE("pho is non-increasing under k-fold line repetition") {
  const PronouncingDict* dict = &fixture_dict();
  PhonemeSequence line = phonemize_english("shine bright tonight", dict);
  double prev = 2.0;
  for (int k = 1; k <= 6; ++k) {
    std::vector<PhonemeSequence> section(k, line);
    auto v = pho(section);
    REQUIRE(v.has_value());
    CHECK(*v <= prev + 1e-15);
    prev = *v;
  }
}

TEST_CASE("profile aggregation: mean and population sigma") {
  PhoProfile p = make_pho_profile({0.5, 0.7});
  CHECK(p.pho_deg == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(p.pho_var == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(p.per_section.size() == 2);
}

TEST_CASE("identical sections give zero variance") {
  auto song = test::make_song({
      {{"la la la", "라 라 라"}},
      {{"la la la", "라 라 라"}},
      {{"la la la", "라 라 라"}},
  });
  const PronouncingDict* dict = &fixture_dict();
  PhoProfile p = pho_profile(song, Lang::en, dict);
  REQUIRE(p.per_section.size() == 3);
  CHECK(p.pho_var == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p.per_section[0] == p.per_section[1]);
}

TEST_CASE("pho_profile matches a scripted recount on a four-section song") {
  const PronouncingDict* dict = &fixture_dict();
  auto song = test::make_song({
      {{"shine like a star tonight", "별처럼 빛나는 밤"},
       {"dance in the moonlight", "달빛 아래 춤을 춰"}},
      {{"la la la la", "라 라 라 라"}},
      {{"my heart is on fire", "내 마음은 불타올라"},
       {"burning higher and higher", "더 높이 타올라"}},
      {{"echo echo in my head", "메아리 메아리 울려"}},
  });

  for (Lang side : {Lang::en, Lang::kr}) {
    PhoProfile got = pho_profile(song, side, dict);
    // Independent recount straight from the oracle.
    std::vector<double> expected;
    for (const auto& sec : song.sections) {
      std::vector<PhonemeSequence> lines;
      for (const auto& lp : sec.lines) {
        lines.push_back(side == Lang::en ? phonemize_english(lp.en, dict)
                                         : phonemize_korean(lp.kr, dict));
      }
      auto stream = test::concat_streams(lines);
      if (stream.size() < 2) continue;
      expected.push_back(test::pho_oracle(stream));
    }
    REQUIRE(got.per_section.size() == expected.size());
    double mean = 0.0;
    for (double v : expected) mean += v;
    mean /= static_cast<double>(expected.size());
    double sq = 0.0;
    for (double v : expected) sq += (v - mean) * (v - mean);
    const double sigma = std::sqrt(sq / static_cast<double>(expected.size()));
    for (std::size_t s = 0; s < expected.size(); ++s) {
      CHECK(got.per_section[s] == doctest::Approx(expected[s]).epsilon(1e-15));
    }
    CHECK(got.pho_deg == doctest::Approx(mean).epsilon(1e-12));
    CHECK(got.pho_var == doctest::Approx(sigma).epsilon(1e-12));
    CHECK(got.pho_deg >= 0.0);
    CHECK(got.pho_deg <= 1.0);
    CHECK(got.pho_var <= 0.5);
  }
}

TEST_CASE("pho_profile with nothing scorable raises a data error") {
  auto song = test::make_song({});
  song.song_id = "empty";
  CHECK_THROWS_AS(pho_profile(song, Lang::en, nullptr), DataError);
}

TEST_CASE("jamo table override by TSV") {
  std::istringstream tsv("# initial siot gets a new label\nᄉ\tSH\nᅡ\tAH\n");
  JamoPhoneTable table = JamoPhoneTable::load_tsv(tsv);
  CHECK(tokens_of(phonemize_korean("숨", nullptr, table)) ==
        std::vector<std::string>{"SH", "U", "M", "<eos>"});
  CHECK(tokens_of(phonemize_korean("아", nullptr, table)) ==
        std::vector<std::string>{"AH", "<eos>"});
  // Defaults untouched elsewhere.
  CHECK(tokens_of(phonemize_korean("나", nullptr, table)) ==
        std::vector<std::string>{"N", "AH", "<eos>"});

  std::istringstream bad("not a tsv line\n");
  CHECK_THROWS_AS(JamoPhoneTable::load_tsv(bad), ParseError);
  std::istringstream badkey("x\tPH\n");
  CHECK_THROWS_AS(JamoPhoneTable::load_tsv(badkey), ParseError);
}

TEST_CASE("silent jamo emit nothing") {
  // 앙: silent initial, medial A, final NG.
  CHECK(tokens_of(phonemize_korean("앙")) == std::vector<std::string>{"A", "NG", "<eos>"});
  // 가: initial G, medial A, no final.
  CHECK(tokens_of(phonemize_korean("가")) == std::vector<std::string>{"G", "A", "<eos>"});
}
