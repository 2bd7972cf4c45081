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
#include "kelp/phonetics.hpp"
#include "kelp/syllable.hpp"
#include "testutil.hpp"

using namespace kelp;
using test::fixture_dict;

namespace {

int breakdown_sum(const SyllableCount& sc) {
  int sum = 0;
  for (const auto& tc : sc.breakdown) sum += tc.count;
  return sum;
}

}  // namespace

TEST_CASE("dictionary loads with comments and variant entries skipped") {
  const PronouncingDict& dict = fixture_dict();
  CHECK(dict.size() > 1000);
  CHECK(dict.lookup("THE") != nullptr);
  CHECK(dict.lookup("THE(2)") == nullptr);
  const Pronunciation* hello = dict.lookup("HELLO");
  REQUIRE(hello != nullptr);
  CHECK(hello->vowel_count == 2);
  // Stress digits are stripped at load.
  for (const auto& p : hello->phones) {
    CHECK(p.find_first_of("012") == std::string::npos);
  }
}

TEST_CASE("dictionary parse rejects a line without phones") {
  std::istringstream in("GOODWORD  G UH1 D\nBADWORD\n");
  CHECK_THROWS_AS(PronouncingDict::parse(in), ParseError);
}

TEST_CASE("normalize_key uppercases and fixes curly apostrophes") {
  CHECK(PronouncingDict::normalize_key("don’t") == "DON'T");
  CHECK(PronouncingDict::normalize_key("I'll") == "I'LL");
}

TEST_CASE("korean counting is the hangul block count") {
  CHECK(count_syllables_korean("하늘을 피해 숨지").value == 7);
  CHECK(count_syllables_korean("").value == 0);
  CHECK(count_syllables_korean("안녕!!").value == 2);
  // Spaces, Latin, digits, punctuation contribute nothing here.
  CHECK(count_syllables_korean("abc 123 !?").value == 0);

  SyllableCount sc = count_syllables_korean("안녕!!");
  REQUIRE(sc.breakdown.size() == 1);
  CHECK(sc.breakdown[0].method == CountMethod::hangul);
  CHECK(sc.value == breakdown_sum(sc));
}

TEST_CASE("korean counting matches the code-point oracle on random strings") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    std::string s = test::random_hangul_string(rng);
    CHECK(count_syllables_korean(s).value == test::hangul_count_oracle(s));
  }
}

TEST_CASE("english counting anchors") {
  const PronouncingDict* dict = &fixture_dict();
  CHECK(count_syllables_english("Hello", dict).value == 2);
  CHECK(count_syllables_english("", dict).value == 0);
  CHECK(count_syllables_english("I'll stray off the path I'm walking", dict).value == 8);
}

TEST_CASE("english counting uses the dictionary when the token is known") {
  const PronouncingDict* dict = &fixture_dict();
  SyllableCount sc = count_syllables_english("walking", dict);
  REQUIRE(sc.breakdown.size() == 1);
  CHECK(sc.breakdown[0].method == CountMethod::dictionary);
  CHECK(sc.value == 2);
  // Case and punctuation insensitive lookup.
  CHECK(count_syllables_english("WALKING!", dict).value == 2);
  CHECK(count_syllables_english("“Hello,”", dict).value == 2);
}

TEST_CASE("heuristic fallback for out-of-vocabulary words") {
  const PronouncingDict* dict = &fixture_dict();
  struct Case {
    const char* word;
    int count;
  };
  // None of these are fixture entries.
  const Case cases[] = {
      {"shimmering", 3}, {"moonbeam", 2}, {"starlit", 2}, {"glimmer", 2},
      {"snowstorms", 2}, {"bling", 1},    {"vibe", 1},    {"trable", 2},
  };
  for (const auto& c : cases) {
    REQUIRE(dict->lookup(PronouncingDict::normalize_key(c.word)) == nullptr);
    SyllableCount sc = count_syllables_english(c.word, dict);
    CHECK_MESSAGE(sc.value == c.count, c.word);
    CHECK(sc.breakdown[0].method == CountMethod::heuristic);
  }
}

TEST_CASE("heuristic vowel grouping rules") {
  CHECK(heuristic_syllables("make") == 1);     // silent final e
  CHECK(heuristic_syllables("table") == 1 + 1);  // consonant-le keeps the e
  CHECK(heuristic_syllables("whale") == 1);    // vowel before l: plain silent e
  CHECK(heuristic_syllables("free") == 1);     // ee is one group
  CHECK(heuristic_syllables("the") == 1);      // never below one
  CHECK(heuristic_syllables("yes") == 1);      // initial y before vowel is consonant
  CHECK(heuristic_syllables("my") == 1);       // y as vowel
  CHECK(heuristic_syllables("goodbye") == 2);
  CHECK(heuristic_syllables("rhythm") == 1);   // y group mid-word
  CHECK(heuristic_syllables("pssst") == 1);    // letters but no vowels
  CHECK(heuristic_syllables("") == 0);
}

TEST_CASE("vowel analysis exposes groups and silent e") {
  VowelAnalysis make = analyze_vowels("make");
  REQUIRE(make.groups.size() == 2);
  CHECK(make.final_e_dropped);
  VowelAnalysis table = analyze_vowels("table");
  CHECK_FALSE(table.final_e_dropped);
}

TEST_CASE("spelled letters count one each and W counts three") {
  const PronouncingDict* dict = &fixture_dict();
  CHECK(count_syllables_english("L-O-V-E", dict).value == 4);
  CHECK(count_syllables_english("D-J", dict).value == 2);
  CHECK(count_syllables_english("W-O-W", dict).value == 7);
  // Single letters fall through to the dictionary letter entries.
  CHECK(count_syllables_english("W", dict).value == 3);
  CHECK(count_syllables_english("L", dict).value == 1);
}

TEST_CASE("hyphenated vocables count per part") {
  const PronouncingDict* dict = &fixture_dict();
  CHECK(count_syllables_english("woah-oh-oh", dict).value == 3);
  CHECK(count_syllables_english("woah-oh-oh", nullptr).value == 3);
}

TEST_CASE("digits expand to english number words") {
  const PronouncingDict* dict = &fixture_dict();
  CHECK(count_syllables_english("2", dict).value == 1);          // two
  CHECK(count_syllables_english("24", dict).value == 3);         // twenty four
  CHECK(count_syllables_english("365", dict).value == 6);        // three hundred sixty five
  CHECK(count_syllables_english("2002", dict).value == 4);       // two thousand two
  CHECK(count_syllables_english("007", dict).value == 6);        // zero zero seven
}

TEST_CASE("number_to_words") {
  using V = std::vector<std::string>;
  CHECK(number_to_words("0") == V{"zero"});
  CHECK(number_to_words("13") == V{"thirteen"});
  CHECK(number_to_words("24") == V{"twenty", "four"});
  CHECK(number_to_words("100") == V{"one", "hundred"});
  CHECK(number_to_words("365") == V{"three", "hundred", "sixty", "five"});
  CHECK(number_to_words("2002") == V{"two", "thousand", "two"});
  CHECK(number_to_words("007") == V{"zero", "zero", "seven"});
  CHECK(number_to_words("1234567") ==
        V{"one", "two", "three", "four", "five", "six", "seven"});
}

TEST_CASE("mixed-script lines split into same-script runs") {
  const PronouncingDict* dict = &fixture_dict();
  CHECK(count_syllables_line("마지막엔 break your heart", dict).value == 7);
  CHECK(count_syllables_line("L-O-V-E or hatred", dict).value == 7);
  CHECK(count_syllables_line("하늘을 피해 숨지", dict).value == 7);
  // Script switch inside one token.
  CHECK(count_syllables_line("해boy", dict).value == 2);
  CHECK(count_syllables_line("Baby 내 손을 잡아", dict).value == 7);
}

TEST_CASE("parentheticals are counted by default and strippable by flag") {
  const PronouncingDict* dict = &fixture_dict();
  SyllableOptions keep;
  SyllableOptions strip;
  strip.include_parentheticals = false;
  CHECK(count_syllables_line("I love you (oh baby)", dict, keep).value == 6);
  CHECK(count_syllables_line("I love you (oh baby)", dict, strip).value == 3);
  CHECK(count_syllables_line("쉽게 놔줄 맘이 없거든 (Never let go)", dict, keep).value == 13);
  CHECK(count_syllables_line("쉽게 놔줄 맘이 없거든 (Never let go)", dict, strip).value == 9);
  // Unbalanced parenthesis stays literal text.
  CHECK(count_syllables_line("hello (world", dict, strip).value == 3);
}

TEST_CASE("accented latin letters reach the heuristic") {
  // Transliterated to "cafe"/"naive"; the vowel-group rules then apply,
  // silent final e included.
  CHECK(count_syllables_english("café", nullptr).value == 1);
  CHECK(count_syllables_english("naïve", nullptr).value == 1);
  CHECK(count_syllables_english("señorita", nullptr).value == 4);
}

TEST_CASE("property: appending a hangul block adds exactly one syllable") {
  const PronouncingDict* dict = &fixture_dict();
  std::mt19937_64 rng(5);
  const std::string lines[] = {"", "hello", "마지막엔 break", "twenty 24", "한", "woah-oh"};
  for (const auto& base : lines) {
    for (int i = 0; i < 50; ++i) {
      const char32_t block = static_cast<char32_t>(0xAC00 + rng() % 11172);
      std::string appended = base + uni::encode_utf8(std::u32string(1, block));
      CHECK(count_syllables_line(appended, dict).value ==
            count_syllables_line(base, dict).value + 1);
    }
  }
}

TEST_CASE("property: counts add over whitespace concatenation") {
  const PronouncingDict* dict = &fixture_dict();
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    std::string a = test::random_hangul_string(rng);
    std::string b = test::random_hangul_string(rng);
    CHECK(count_syllables_line(a + " " + b, dict).value ==
          count_syllables_line(a, dict).value + count_syllables_line(b, dict).value);
  }
}

TEST_CASE("property: identical input gives identical counts") {
  const PronouncingDict* dict = &fixture_dict();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    std::string s = test::random_hangul_string(rng);
    SyllableCount a = count_syllables_line(s, dict);
    SyllableCount b = count_syllables_line(s, dict);
    CHECK(a.value == b.value);
    REQUIRE(a.breakdown.size() == b.breakdown.size());
  }
}

TEST_CASE("property: value equals the breakdown sum") {
  const PronouncingDict* dict = &fixture_dict();
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    std::string s = test::random_hangul_string(rng);
    SyllableCount sc = count_syllables_line(s, dict);
    CHECK(sc.value == breakdown_sum(sc));
  }
}

TEST_CASE("dictionary words count their vowel phonemes, cross-checked with phonemization") {
  const PronouncingDict& dict = fixture_dict();
  int checked = 0;
  for (const auto& [word, pron] : dict.entries()) {
    if (checked >= 1000) break;
    if (word.find('-') != std::string::npos) continue;
    ++checked;
    const int counted = count_syllables_english(word, &dict).value;
    CHECK_MESSAGE(counted == pron.vowel_count, word);
    // Same number of vowel phones through the phonetics route.
    PhonemeSequence seq = phonemize_english(word, &dict);
    int vowels = 0;
    for (const auto& p : seq.tokens) {
      if (p != kEos && is_arpabet_vowel(p)) ++vowels;
    }
    CHECK_MESSAGE(vowels == pron.vowel_count, word);
  }
  CHECK(checked == 1000);
}
