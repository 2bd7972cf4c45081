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

#ifndef KELP_SYLLABLE_HPP_
#define KELP_SYLLABLE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "kelp/cmudict.hpp"

namespace kelp {

enum class CountMethod { hangul, dictionary, heuristic, zero };

std::string_view to_string(CountMethod m);

struct TokenCount {
  std::string token;
  int count = 0;
  CountMethod method = CountMethod::zero;
};

// value is always the sum of the breakdown counts.
struct SyllableCount {
  int value = 0;
  std::vector<TokenCount> breakdown;
};

struct SyllableOptions {
  // Parenthesized background ad-libs ("(Never let go)") are counted by
  // default; turn off to strip them before counting.
  bool include_parentheticals = true;
};

// One precomposed Hangul syllable block (U+AC00..U+D7A3) is one sung
// syllable; everything else contributes zero here.
SyllableCount count_syllables_korean(std::string_view text);

// Per whitespace token: pronouncing-dictionary vowel-phone count when the
// token is in the dictionary, else the vowel-group heuristic. Digit runs are
// expanded to English number words first. Tokens of hyphen-separated single
// capital letters are counted as spelled letters (1 each, "W" = 3).
SyllableCount count_syllables_english(std::string_view text,
                                      const PronouncingDict* dict = nullptr,
                                      const SyllableOptions& opts = {});

// Splits mixed-script lines into maximal same-script runs: Hangul runs are
// counted as syllable blocks, everything else by the English rules.
SyllableCount count_syllables_line(std::string_view text,
                                   const PronouncingDict* dict = nullptr,
                                   const SyllableOptions& opts = {});

// The heuristic's vowel grouping over a lowercase ASCII letter string.
// y is a vowel except word-initial before a vowel. Exposed because the
// grapheme-to-phoneme fallback maps one phone per surviving group.
struct VowelAnalysis {
  // [begin, end) index spans of maximal vowel-letter runs.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  // True when a word-final silent "e" group is dropped (not dropped for
  // "le" after a consonant).
  bool final_e_dropped = false;
};
VowelAnalysis analyze_vowels(std::string_view lower_word);

// max(1, surviving groups) for any letter-bearing input; 0 otherwise.
int heuristic_syllables(std::string_view lower_word);

// "365" -> {"three","hundred","sixty","five"}. Runs with leading zeros or
// more than six digits are spelled digit by digit.
std::vector<std::string> number_to_words(std::string_view digits);

}  // namespace kelp

#endif  // KELP_SYLLABLE_HPP_
