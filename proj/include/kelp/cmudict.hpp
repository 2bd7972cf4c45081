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

#ifndef KELP_CMUDICT_HPP_
#define KELP_CMUDICT_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kelp {

// First listed pronunciation of a dictionary word. Phones are ARPABET labels
// with the stress digits already stripped ("AA1" -> "AA"); vowel_count is the
// number of vowel phones, which is the word's syllable count.
struct Pronunciation {
  std::vector<std::string> phones;
  int vowel_count = 0;
};

bool is_arpabet_vowel(std::string_view phone);

// Read-only after load; shareable across threads.
//
// File format: CMUdict text. One entry per line, word then whitespace then
// phones; ";;;" starts a comment line; alternate pronunciations are keyed
// "WORD(2)", "WORD(3)", ... and are skipped (only the first listed
// pronunciation is used).
class PronouncingDict {
 public:
  static PronouncingDict parse(std::istream& in);
  static PronouncingDict load_file(const std::string& path);

  // Lookup is by exact uppercase key; callers pass tokens through
  // normalize_key first.
  const Pronunciation* lookup(std::string_view word) const;

  // Uppercases ASCII and maps curly apostrophes to '\''.
  static std::string normalize_key(std::string_view token);

  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<std::string, Pronunciation>& entries() const { return entries_; }

 private:
  std::unordered_map<std::string, Pronunciation> entries_;
};

}  // namespace kelp

#endif  // KELP_CMUDICT_HPP_
