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

#include "kelp/phonetics.hpp"

#include <cmath>
#include <istream>
#include <unordered_set>

#include "kelp/error.hpp"
#include "kelp/syllable.hpp"
#include "kelp/unicode.hpp"

namespace kelp {

namespace {

constexpr char32_t kHangulBase = 0xAC00;
constexpr int kMedialCount = 21;
constexpr int kFinalCount = 28;

bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// Letter-to-sound fallback: greedy consonant digraphs, one phone per
// surviving vowel group (the syllable heuristic's grouping, silent final e
// dropped).
const std::pair<std::string_view, std::string_view> kDigraphs[] = {
    {"ch", "CH"}, {"sh", "SH"}, {"th", "TH"}, {"ph", "F"},
    {"wh", "W"},  {"ng", "NG"}, {"ck", "K"},
};

std::string_view vowel_phone(char first_letter) {
  switch (first_letter) {
    case 'a': return "AE";
    case 'e': return "EH";
    case 'i': return "IH";
    case 'o': return "AA";
    case 'u': return "AH";
    case 'y': return "IH";
  }
  return "AH";
}

std::string_view consonant_phone(char c) {
  switch (c) {
    case 'b': return "B";
    case 'c': return "K";
    case 'd': return "D";
    case 'f': return "F";
    case 'g': return "G";
    case 'h': return "HH";
    case 'j': return "JH";
    case 'k': return "K";
    case 'l': return "L";
    case 'm': return "M";
    case 'n': return "N";
    case 'p': return "P";
    case 'q': return "K";
    case 'r': return "R";
    case 's': return "S";
    case 't': return "T";
    case 'v': return "V";
    case 'w': return "W";
    case 'y': return "Y";
    case 'z': return "Z";
  }
  return "";
}

void letter_to_sound(std::string_view lower_word, std::vector<std::string>& out) {
  VowelAnalysis va = analyze_vowels(lower_word);
  std::size_t group_cursor = 0;
  std::size_t i = 0;
  const std::size_t n = lower_word.size();
  while (i < n) {
    while (group_cursor < va.groups.size() && va.groups[group_cursor].second <= i) ++group_cursor;
    if (group_cursor < va.groups.size() && va.groups[group_cursor].first == i) {
      const auto& g = va.groups[group_cursor];
      const bool dropped =
          va.final_e_dropped && group_cursor + 1 == va.groups.size();
      if (!dropped) out.emplace_back(vowel_phone(lower_word[g.first]));
      i = g.second;
      ++group_cursor;
      continue;
    }
    bool matched = false;
    if (i + 1 < n) {
      std::string_view two = lower_word.substr(i, 2);
      if (two == "qu") {
        out.emplace_back("K");
        out.emplace_back("W");
        i += 2;
        continue;
      }
      for (const auto& [graph, phone] : kDigraphs) {
        if (two == graph) {
          // "ng" only when g is not opening a vowel's onset handled by
          // grouping; greedy match is fine for a fallback.
          out.emplace_back(phone);
          i += 2;
          matched = true;
          break;
        }
      }
    }
    if (matched) continue;
    char c = lower_word[i];
    if (c == 'x') {
      out.emplace_back("K");
      out.emplace_back("S");
    } else {
      std::string_view p = consonant_phone(c);
      if (!p.empty()) out.emplace_back(p);
    }
    ++i;
  }
}

// Splits a token into letter/apostrophe chunks for lookup; digits and other
// marks separate chunks and emit nothing.
void phonemize_token(const std::string& token, const PronouncingDict* dict,
                     std::vector<std::string>& out) {
  if (dict != nullptr) {
    const auto is_key_char = [](char c) {
      return is_ascii_letter(c) || (c >= '0' && c <= '9') || c == '\'';
    };
    const std::string key = PronouncingDict::normalize_key(token);
    // Exact key first (covers entries like 'EM), then surrounding
    // punctuation stripped with apostrophes kept, then bare.
    std::size_t b = 0, e = key.size();
    while (b < e && !is_key_char(key[b])) ++b;
    while (e > b && !is_key_char(key[e - 1])) --e;
    std::string stripped = key.substr(b, e - b);
    std::size_t ab = stripped.find_first_not_of('\'');
    std::size_t ae = stripped.find_last_not_of('\'');
    for (const std::string& candidate :
         {key, stripped,
          ab == std::string::npos ? std::string() : stripped.substr(ab, ae - ab + 1)}) {
      if (candidate.empty()) continue;
      if (const Pronunciation* p = dict->lookup(candidate)) {
        out.insert(out.end(), p->phones.begin(), p->phones.end());
        return;
      }
    }
  }
  std::string lower;
  for (char32_t cp : uni::decode_utf8(token)) {
    if (cp < 0x80 && is_ascii_letter(static_cast<char>(cp))) {
      char c = static_cast<char>(cp);
      lower.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
    }
  }
  if (!lower.empty()) letter_to_sound(lower, out);
}

void phonemize_english_into(std::string_view line, const PronouncingDict* dict,
                            std::vector<std::string>& out) {
  std::u32string cps = uni::decode_utf8(line);
  std::u32string cur;
  const auto flush = [&] {
    if (!cur.empty()) {
      phonemize_token(uni::encode_utf8(cur), dict, out);
      cur.clear();
    }
  };
  for (char32_t cp : cps) {
    if (uni::is_space(cp)) {
      flush();
    } else {
      cur.push_back(cp);
    }
  }
  flush();
}

}  // namespace

std::optional<JamoIndices> decompose_hangul(char32_t cp) {
  if (!uni::is_hangul_syllable(cp)) return std::nullopt;
  int index = static_cast<int>(cp - kHangulBase);
  JamoIndices j;
  j.initial = index / (kMedialCount * kFinalCount);
  j.medial = (index % (kMedialCount * kFinalCount)) / kFinalCount;
  j.final_index = index % kFinalCount;
  return j;
}

char32_t compose_hangul(const JamoIndices& j) {
  return kHangulBase +
         static_cast<char32_t>((j.initial * kMedialCount + j.medial) * kFinalCount +
                               j.final_index);
}

const JamoPhoneTable& JamoPhoneTable::defaults() {
  static const JamoPhoneTable table = [] {
    JamoPhoneTable t;
    t.initials = {"G",  "KK", "N",  "D", "TT", "R", "M", "B", "PP", "S",
                  "SS", "",   "J",  "JJ", "CH", "K", "T", "P", "H"};
    t.medials = {"A",  "AE", "YA", "YAE", "EO", "E",  "YEO", "YE", "O",  "WA", "WAE",
                 "OE", "YO", "U",  "WO",  "WE", "WI", "YU",  "EU", "UI", "I"};
    t.finals = {"",   "K",  "KK", "KS", "N",  "NJ", "NH", "T",  "L", "LG",
                "LM", "LB", "LS", "LT", "LP", "LH", "M",  "P",  "PS", "S",
                "SS", "NG", "J",  "CH", "K",  "T",  "P",  "H"};
    return t;
  }();
  return table;
}

JamoPhoneTable JamoPhoneTable::load_tsv(std::istream& in) {
  JamoPhoneTable table = defaults();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("jamo table line " + std::to_string(lineno) + " is not jamo<TAB>label",
                       static_cast<std::size_t>(lineno));
    }
    std::u32string jamo = uni::decode_utf8(line.substr(0, tab));
    std::string label = line.substr(tab + 1);
    if (jamo.size() != 1) {
      throw ParseError("jamo table line " + std::to_string(lineno) + " key must be one jamo",
                       static_cast<std::size_t>(lineno));
    }
    char32_t cp = jamo[0];
    if (cp >= 0x1100 && cp <= 0x1112) {
      table.initials[cp - 0x1100] = label;
    } else if (cp >= 0x1161 && cp <= 0x1175) {
      table.medials[cp - 0x1161] = label;
    } else if (cp >= 0x11A8 && cp <= 0x11C2) {
      table.finals[cp - 0x11A8 + 1] = label;
    } else {
      throw ParseError("jamo table line " + std::to_string(lineno) +
                           " key is not a conjoining jamo",
                       static_cast<std::size_t>(lineno));
    }
  }
  return table;
}

PhonemeSequence phonemize_english(std::string_view line, const PronouncingDict* dict) {
  PhonemeSequence seq;
  phonemize_english_into(line, dict, seq.tokens);
  seq.tokens.emplace_back(kEos);
  seq.line_count = 1;
  return seq;
}

PhonemeSequence phonemize_korean(std::string_view line, const PronouncingDict* dict,
                                 const JamoPhoneTable& table) {
  PhonemeSequence seq;
  std::u32string cps = uni::decode_utf8(line);
  std::u32string latin_run;
  const auto flush_latin = [&] {
    if (!latin_run.empty()) {
      phonemize_english_into(uni::encode_utf8(latin_run), dict, seq.tokens);
      latin_run.clear();
    }
  };
  for (char32_t cp : cps) {
    if (uni::is_hangul_syllable(cp)) {
      flush_latin();
      JamoIndices j = *decompose_hangul(cp);
      if (!table.initials[j.initial].empty()) seq.tokens.push_back(table.initials[j.initial]);
      if (!table.medials[j.medial].empty()) seq.tokens.push_back(table.medials[j.medial]);
      if (!table.finals[j.final_index].empty()) seq.tokens.push_back(table.finals[j.final_index]);
    } else {
      latin_run.push_back(cp);
    }
  }
  flush_latin();
  seq.tokens.emplace_back(kEos);
  seq.line_count = 1;
  return seq;
}

std::optional<double> pho(std::span<const PhonemeSequence> section_lines) {
  std::size_t total_tokens = 0;
  for (const auto& seq : section_lines) total_tokens += seq.tokens.size();
  if (total_tokens < 2) return std::nullopt;

  std::unordered_set<std::string> unique;
  std::size_t total_bigrams = 0;
  const std::string* prev = nullptr;
  for (const auto& seq : section_lines) {
    for (const auto& tok : seq.tokens) {
      if (prev != nullptr) {
        ++total_bigrams;
        unique.insert(*prev + '\x1f' + tok);
      }
      prev = &tok;
    }
  }
  return static_cast<double>(unique.size()) / static_cast<double>(total_bigrams);
}

PhoProfile make_pho_profile(std::vector<double> per_section) {
  PhoProfile p;
  p.per_section = std::move(per_section);
  if (p.per_section.empty()) return p;
  double sum = 0.0;
  for (double v : p.per_section) sum += v;
  p.pho_deg = sum / static_cast<double>(p.per_section.size());
  double sq = 0.0;
  for (double v : p.per_section) sq += (v - p.pho_deg) * (v - p.pho_deg);
  p.pho_var = std::sqrt(sq / static_cast<double>(p.per_section.size()));
  return p;
}

PhoProfile pho_profile(const AlignedSong& song, Lang side, const PronouncingDict* dict,
                       const JamoPhoneTable& table) {
  std::vector<double> values;
  for (const auto& sec : song.sections) {
    std::vector<PhonemeSequence> lines;
    lines.reserve(sec.lines.size());
    for (const auto& lp : sec.lines) {
      const std::string& text = lp.text(side);
      lines.push_back(side == Lang::en ? phonemize_english(text, dict)
                                       : phonemize_korean(text, dict, table));
    }
    if (auto v = pho(lines)) values.push_back(*v);
  }
  if (values.empty()) {
    throw DataError("no scorable sections in song \"" + song.song_id + "\"");
  }
  return make_pho_profile(std::move(values));
}

}  // namespace kelp
