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

#include "kelp/syllable.hpp"

#include <cstdint>

#include "kelp/unicode.hpp"

namespace kelp {

namespace {

bool is_ascii_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_hyphen(char32_t cp) {
  return cp == U'-' || cp == 0x2010 || cp == 0x2011 || cp == 0x2013 || cp == 0x2014;
}

// Maps accented Latin letters onto ASCII so the heuristic sees their vowels.
// Unmapped non-ASCII letters are dropped.
std::string_view transliterate(char32_t cp) {
  switch (cp) {
    case 0xC0: case 0xC1: case 0xC2: case 0xC3: case 0xC4: case 0xC5:
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5:
      return "a";
    case 0xC6: case 0xE6: return "ae";
    case 0xC7: case 0xE7: return "c";
    case 0xC8: case 0xC9: case 0xCA: case 0xCB:
    case 0xE8: case 0xE9: case 0xEA: case 0xEB:
      return "e";
    case 0xCC: case 0xCD: case 0xCE: case 0xCF:
    case 0xEC: case 0xED: case 0xEE: case 0xEF:
      return "i";
    case 0xD1: case 0xF1: return "n";
    case 0xD2: case 0xD3: case 0xD4: case 0xD5: case 0xD6: case 0xD8:
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8:
      return "o";
    case 0xD9: case 0xDA: case 0xDB: case 0xDC:
    case 0xF9: case 0xFA: case 0xFB: case 0xFC:
      return "u";
    case 0xDD: case 0xFD: case 0xFF: case 0x178: return "y";
    case 0xDF: return "ss";
    case 0x152: case 0x153: return "oe";
    case 0x160: case 0x161: return "s";
    case 0x17D: case 0x17E: return "z";
    default: return "";
  }
}

std::string strip_parentheticals(std::string_view text) {
  std::u32string cps = uni::decode_utf8(text);
  std::u32string out;
  out.reserve(cps.size());
  std::size_t i = 0;
  while (i < cps.size()) {
    char32_t cp = cps[i];
    bool open = (cp == U'(' || cp == 0xFF08);
    if (open) {
      int depth = 1;
      std::size_t j = i + 1;
      while (j < cps.size() && depth > 0) {
        if (cps[j] == U'(' || cps[j] == 0xFF08) ++depth;
        if (cps[j] == U')' || cps[j] == 0xFF09) --depth;
        ++j;
      }
      if (depth == 0) {
        out.push_back(U' ');  // keep neighbours apart
        i = j;
        continue;
      }
    }
    out.push_back(cp);
    ++i;
  }
  return uni::encode_utf8(out);
}

std::vector<std::string> whitespace_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::u32string cps = uni::decode_utf8(text);
  std::u32string cur;
  for (char32_t cp : cps) {
    if (uni::is_space(cp)) {
      if (!cur.empty()) {
        tokens.push_back(uni::encode_utf8(cur));
        cur.clear();
      }
    } else {
      cur.push_back(cp);
    }
  }
  if (!cur.empty()) tokens.push_back(uni::encode_utf8(cur));
  return tokens;
}

struct ChunkCount {
  int count = 0;
  bool used_dict = false;
  bool used_heuristic = false;
  bool has_letters = false;
};

// Counts a run of letters (plus apostrophes): dictionary first, heuristic
// otherwise.
ChunkCount count_word_chunk(const std::string& chunk, const PronouncingDict* dict) {
  ChunkCount r;
  std::string letters;
  for (char c : chunk) {
    if (is_ascii_letter(c)) letters.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
  }
  r.has_letters = !letters.empty();
  if (!r.has_letters) return r;

  if (dict != nullptr) {
    std::string key = PronouncingDict::normalize_key(chunk);
    const Pronunciation* p = dict->lookup(key);
    if (p == nullptr) {
      std::size_t b = key.find_first_not_of('\'');
      std::size_t e = key.find_last_not_of('\'');
      if (b != std::string::npos && (b > 0 || e + 1 < key.size())) {
        p = dict->lookup(key.substr(b, e - b + 1));
      }
    }
    if (p != nullptr) {
      r.count = p->vowel_count > 0 ? p->vowel_count : 1;
      r.used_dict = true;
      return r;
    }
  }
  r.count = heuristic_syllables(letters);
  r.used_heuristic = true;
  return r;
}

// A hyphen part after transliteration and punctuation stripping: alternating
// letter chunks and digit runs.
ChunkCount count_part(const std::string& part, const PronouncingDict* dict) {
  ChunkCount total;
  std::size_t i = 0;
  while (i < part.size()) {
    char c = part[i];
    if (c >= '0' && c <= '9') {
      std::size_t start = i;
      while (i < part.size() && part[i] >= '0' && part[i] <= '9') ++i;
      for (const std::string& word : number_to_words(part.substr(start, i - start))) {
        ChunkCount w = count_word_chunk(word, dict);
        total.count += w.count;
        total.used_dict |= w.used_dict;
        total.used_heuristic |= w.used_heuristic;
      }
      continue;
    }
    if (is_ascii_letter(c) || c == '\'') {
      std::size_t start = i;
      while (i < part.size() && (is_ascii_letter(part[i]) || part[i] == '\'')) ++i;
      ChunkCount w = count_word_chunk(part.substr(start, i - start), dict);
      total.count += w.count;
      total.used_dict |= w.used_dict;
      total.used_heuristic |= w.used_heuristic;
      total.has_letters = true;
      continue;
    }
    ++i;
  }
  return total;
}

// Keeps ASCII letters, digits and apostrophes; transliterates accented Latin
// letters; drops the rest.
std::string clean_part(std::string_view part) {
  std::string out;
  for (char32_t cp : uni::decode_utf8(part)) {
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      if (is_ascii_letter(c) || (c >= '0' && c <= '9') || c == '\'') out.push_back(c);
    } else if (cp == 0x2018 || cp == 0x2019) {
      out.push_back('\'');
    } else {
      out += transliterate(cp);
    }
  }
  return out;
}

TokenCount count_token_english(const std::string& token, const PronouncingDict* dict) {
  TokenCount tc;
  tc.token = token;

  std::vector<std::string> parts;
  {
    std::u32string cps = uni::decode_utf8(token);
    std::u32string cur;
    for (char32_t cp : cps) {
      if (is_hyphen(cp)) {
        parts.push_back(uni::encode_utf8(cur));
        cur.clear();
      } else {
        cur.push_back(cp);
      }
    }
    parts.push_back(uni::encode_utf8(cur));
  }

  // Spelled-out letters: "L-O-V-E".
  if (parts.size() >= 2) {
    bool spelled = true;
    for (const auto& p : parts) {
      if (!(p.size() == 1 && p[0] >= 'A' && p[0] <= 'Z')) {
        spelled = false;
        break;
      }
    }
    if (spelled) {
      for (const auto& p : parts) tc.count += (p[0] == 'W') ? 3 : 1;
      tc.method = CountMethod::heuristic;
      return tc;
    }
  }

  bool used_dict = false, used_heuristic = false, any_letters = false;
  for (const auto& raw : parts) {
    std::string part = clean_part(raw);
    if (part.empty()) continue;
    ChunkCount c = count_part(part, dict);
    tc.count += c.count;
    used_dict |= c.used_dict;
    used_heuristic |= c.used_heuristic;
    any_letters |= c.has_letters;
  }
  if (tc.count == 0 && any_letters) tc.count = 1;
  if (used_heuristic) {
    tc.method = CountMethod::heuristic;
  } else if (used_dict) {
    tc.method = CountMethod::dictionary;
  } else {
    tc.method = CountMethod::zero;
  }
  return tc;
}

}  // namespace

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::hangul: return "hangul";
    case CountMethod::dictionary: return "dictionary";
    case CountMethod::heuristic: return "heuristic";
    case CountMethod::zero: return "zero";
  }
  return "zero";
}

VowelAnalysis analyze_vowels(std::string_view word) {
  VowelAnalysis va;
  const std::size_t n = word.size();
  std::size_t i = 0;
  while (i < n) {
    char c = word[i];
    bool vowel = is_ascii_vowel(c);
    if (!vowel && c == 'y') {
      // y is a consonant only word-initially before a vowel.
      vowel = !(i == 0 && i + 1 < n && is_ascii_vowel(word[i + 1]));
    }
    if (vowel) {
      std::size_t start = i;
      while (i < n) {
        char d = word[i];
        bool v = is_ascii_vowel(d) || (d == 'y' && i != 0);
        if (i == 0 && d == 'y') v = !(n > 1 && is_ascii_vowel(word[1]));
        if (!v) break;
        ++i;
      }
      va.groups.emplace_back(start, i);
    } else {
      ++i;
    }
  }
  if (va.groups.size() >= 2 && n >= 2 && word[n - 1] == 'e') {
    const auto& last = va.groups.back();
    if (last.first == n - 1 && last.second == n) {  // lone final "e" after a consonant
      bool le_exception = n >= 3 && word[n - 2] == 'l' && !is_ascii_vowel(word[n - 3]);
      if (!le_exception) va.final_e_dropped = true;
    }
  }
  return va;
}

int heuristic_syllables(std::string_view word) {
  bool has_letter = false;
  for (char c : word) {
    if (is_ascii_letter(c)) {
      has_letter = true;
      break;
    }
  }
  if (!has_letter) return 0;
  VowelAnalysis va = analyze_vowels(word);
  int count = static_cast<int>(va.groups.size()) - (va.final_e_dropped ? 1 : 0);
  return count < 1 ? 1 : count;
}

std::vector<std::string> number_to_words(std::string_view digits) {
  static const char* kOnes[] = {"zero", "one", "two",  "three", "four",  "five",  "six",
                                "seven", "eight", "nine", "ten",  "eleven", "twelve",
                                "thirteen", "fourteen", "fifteen", "sixteen", "seventeen",
                                "eighteen", "nineteen"};
  static const char* kTens[] = {"", "", "twenty", "thirty", "forty", "fifty",
                                "sixty", "seventy", "eighty", "ninety"};
  std::vector<std::string> out;
  const bool digitwise = digits.size() > 6 || (digits.size() > 1 && digits.front() == '0');
  if (digitwise) {
    for (char c : digits) {
      if (c >= '0' && c <= '9') out.emplace_back(kOnes[c - '0']);
    }
    return out;
  }
  std::uint64_t value = 0;
  for (char c : digits) value = value * 10 + static_cast<std::uint64_t>(c - '0');

  const auto emit_under_1000 = [&](std::uint64_t v) {
    if (v >= 100) {
      out.emplace_back(kOnes[v / 100]);
      out.emplace_back("hundred");
      v %= 100;
      if (v == 0) return;
    }
    if (v >= 20) {
      out.emplace_back(kTens[v / 10]);
      v %= 10;
      if (v == 0) return;
      out.emplace_back(kOnes[v]);
    } else {
      out.emplace_back(kOnes[v]);
    }
  };

  if (value >= 1000) {
    emit_under_1000(value / 1000);
    out.emplace_back("thousand");
    if (value % 1000 != 0) emit_under_1000(value % 1000);
  } else {
    emit_under_1000(value);
  }
  return out;
}

SyllableCount count_syllables_korean(std::string_view text) {
  SyllableCount sc;
  for (const std::string& token : whitespace_tokens(text)) {
    TokenCount tc;
    tc.token = token;
    for (char32_t cp : uni::decode_utf8(token)) {
      if (uni::is_hangul_syllable(cp)) ++tc.count;
    }
    tc.method = tc.count > 0 ? CountMethod::hangul : CountMethod::zero;
    sc.value += tc.count;
    sc.breakdown.push_back(std::move(tc));
  }
  return sc;
}

SyllableCount count_syllables_english(std::string_view text, const PronouncingDict* dict,
                                      const SyllableOptions& opts) {
  SyllableCount sc;
  std::string stripped;
  if (!opts.include_parentheticals) {
    stripped = strip_parentheticals(text);
    text = stripped;
  }
  for (const std::string& token : whitespace_tokens(text)) {
    TokenCount tc = count_token_english(token, dict);
    sc.value += tc.count;
    sc.breakdown.push_back(std::move(tc));
  }
  return sc;
}

SyllableCount count_syllables_line(std::string_view text, const PronouncingDict* dict,
                                   const SyllableOptions& opts) {
  SyllableCount sc;
  std::string stripped;
  if (!opts.include_parentheticals) {
    stripped = strip_parentheticals(text);
    text = stripped;
  }
  for (const std::string& token : whitespace_tokens(text)) {
    std::u32string cps = uni::decode_utf8(token);
    bool has_hangul = false;
    for (char32_t cp : cps) {
      if (uni::is_hangul_syllable(cp)) {
        has_hangul = true;
        break;
      }
    }
    if (!has_hangul) {
      TokenCount tc = count_token_english(token, dict);
      sc.value += tc.count;
      sc.breakdown.push_back(std::move(tc));
      continue;
    }
    // Mixed or Korean token: maximal same-script runs.
    std::size_t i = 0;
    while (i < cps.size()) {
      bool hangul_run = uni::is_hangul_syllable(cps[i]);
      std::size_t start = i;
      while (i < cps.size() && uni::is_hangul_syllable(cps[i]) == hangul_run) ++i;
      std::string run = uni::encode_utf8(std::u32string_view(cps).substr(start, i - start));
      if (hangul_run) {
        TokenCount tc;
        tc.token = std::move(run);
        tc.count = static_cast<int>(i - start);
        tc.method = CountMethod::hangul;
        sc.value += tc.count;
        sc.breakdown.push_back(std::move(tc));
      } else {
        TokenCount tc = count_token_english(run, dict);
        sc.value += tc.count;
        sc.breakdown.push_back(std::move(tc));
      }
    }
  }
  return sc;
}

}  // namespace kelp
