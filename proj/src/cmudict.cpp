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

#include "kelp/cmudict.hpp"

#include <array>
#include <fstream>
#include <istream>

#include "kelp/error.hpp"

namespace kelp {

namespace {

constexpr std::array<std::string_view, 15> kVowels = {
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER",
    "EY", "IH", "IY", "OW", "OY", "UH", "UW"};

std::string strip_stress(std::string_view phone) {
  while (!phone.empty() && phone.back() >= '0' && phone.back() <= '9') {
    phone.remove_suffix(1);
  }
  return std::string(phone);
}

bool is_variant_key(std::string_view word) {
  // "WORD(2)" style alternate pronunciation keys.
  return word.size() >= 3 && word.back() == ')' && word.find('(') != std::string_view::npos;
}

}  // namespace

bool is_arpabet_vowel(std::string_view phone) {
  std::string base = strip_stress(phone);
  for (auto v : kVowels) {
    if (base == v) return true;
  }
  return false;
}

PronouncingDict PronouncingDict::parse(std::istream& in) {
  PronouncingDict dict;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind(";;;", 0) == 0) continue;

    std::size_t pos = line.find_first_of(" \t");
    if (pos == std::string::npos) {
      throw ParseError("dictionary line " + std::to_string(lineno) + " has no pronunciation",
                       static_cast<std::size_t>(lineno));
    }
    std::string word = line.substr(0, pos);
    if (is_variant_key(word)) continue;

    Pronunciation pron;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      if (pos > start) {
        std::string_view phone(line.data() + start, pos - start);
        if (is_arpabet_vowel(phone)) ++pron.vowel_count;
        pron.phones.push_back(strip_stress(phone));
      }
    }
    if (pron.phones.empty()) {
      throw ParseError("dictionary line " + std::to_string(lineno) + " has no phones",
                       static_cast<std::size_t>(lineno));
    }
    dict.entries_.emplace(std::move(word), std::move(pron));
  }
  return dict;
}

PronouncingDict PronouncingDict::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open pronouncing dictionary: " + path);
  return parse(in);
}

const Pronunciation* PronouncingDict::lookup(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  return it == entries_.end() ? nullptr : &it->second;
}

std::string PronouncingDict::normalize_key(std::string_view token) {
  std::string key;
  key.reserve(token.size());
  for (std::size_t i = 0; i < token.size();) {
    unsigned char c = static_cast<unsigned char>(token[i]);
    // U+2018 / U+2019 in UTF-8.
    if (c == 0xE2 && i + 2 < token.size() && static_cast<unsigned char>(token[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(token[i + 2]) == 0x98 ||
         static_cast<unsigned char>(token[i + 2]) == 0x99)) {
      key.push_back('\'');
      i += 3;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      key.push_back(static_cast<char>(c - 32));
    } else {
      key.push_back(static_cast<char>(c));
    }
    ++i;
  }
  return key;
}

}  // namespace kelp
