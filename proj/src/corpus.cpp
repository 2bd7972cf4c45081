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

#include "kelp/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "kelp/error.hpp"
#include "kelp/unicode.hpp"

namespace kelp {

using nlohmann::ordered_json;

std::string_view to_string(Genre g) {
  switch (g) {
    case Genre::kpop: return "kpop";
    case Genre::animation: return "animation";
    case Genre::theatre: return "theatre";
    case Genre::other: return "other";
  }
  return "other";
}

std::string_view to_string(TranslationStatus s) {
  return s == TranslationStatus::official ? "official" : "unofficial";
}

std::string_view to_string(Lang l) { return l == Lang::en ? "en" : "kr"; }

int AlignedSong::line_count() const {
  int n = 0;
  for (const auto& sec : sections) n += static_cast<int>(sec.lines.size());
  return n;
}

namespace {

Genre parse_genre(const std::string& s, const std::string& path) {
  if (s == "kpop") return Genre::kpop;
  if (s == "animation") return Genre::animation;
  if (s == "theatre") return Genre::theatre;
  if (s == "other") return Genre::other;
  throw SchemaError("unknown genre \"" + s + "\"", path);
}

TranslationStatus parse_status(const std::string& s, const std::string& path) {
  if (s == "official") return TranslationStatus::official;
  if (s == "unofficial") return TranslationStatus::unofficial;
  throw SchemaError("unknown translation_status \"" + s + "\"", path);
}

Lang parse_lang(const std::string& s, const std::string& path) {
  if (s == "en") return Lang::en;
  if (s == "kr") return Lang::kr;
  throw SchemaError("unknown original_language \"" + s + "\"", path);
}

std::string require_string(const ordered_json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(std::string("missing required field \"") + key + "\"", path + "." + key);
  }
  if (!it->is_string()) {
    throw SchemaError(std::string("field \"") + key + "\" must be a string", path + "." + key);
  }
  return uni::nfc(it->get<std::string>());
}

AlignedSong song_from_json(const ordered_json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError("song must be an object", path);
  AlignedSong song;
  song.song_id = require_string(j, "song_id", path);
  song.artist = require_string(j, "artist", path);
  song.track = require_string(j, "track", path);
  song.genre = parse_genre(require_string(j, "genre", path), path + ".genre");
  song.translation_status =
      parse_status(require_string(j, "translation_status", path), path + ".translation_status");
  song.original_language =
      parse_lang(require_string(j, "original_language", path), path + ".original_language");

  auto sec_it = j.find("sections");
  if (sec_it == j.end() || !sec_it->is_array()) {
    throw SchemaError("missing or non-array \"sections\"", path + ".sections");
  }
  int line_index = 0;
  int section_index = 0;
  for (const auto& jsec : *sec_it) {
    const std::string spath = path + ".sections[" + std::to_string(section_index) + "]";
    if (!jsec.is_object()) throw SchemaError("section must be an object", spath);
    auto lines_it = jsec.find("lines");
    if (lines_it == jsec.end() || !lines_it->is_array()) {
      throw SchemaError("missing or non-array \"lines\"", spath + ".lines");
    }
    Section sec;
    sec.section_index = ++section_index;
    int li = 0;
    for (const auto& jline : *lines_it) {
      const std::string lpath = spath + ".lines[" + std::to_string(li++) + "]";
      if (!jline.is_object()) throw SchemaError("line must be an object", lpath);
      LinePair lp;
      lp.en = require_string(jline, "en", lpath);
      lp.kr = require_string(jline, "kr", lpath);
      lp.line_index = ++line_index;
      sec.lines.push_back(std::move(lp));
    }
    song.sections.push_back(std::move(sec));
  }
  return song;
}

void check_or_throw(const AlignedSong& song) {
  auto violations = validate_alignment(song);
  if (violations.empty()) return;
  const Violation& v = violations.front();
  std::string msg = "alignment error in song \"" + song.song_id + "\": " + format_violation(v);
  if (violations.size() > 1) {
    msg += " (+" + std::to_string(violations.size() - 1) + " more)";
  }
  throw AlignmentError(msg, song.song_id, v.section_index);
}

std::vector<AlignedSong> parse_json_array(std::string_view bytes, const ParseOptions& opts) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_array()) throw SchemaError("corpus must be a JSON array of songs", "$");
  std::vector<AlignedSong> corpus;
  corpus.reserve(doc.size());
  int i = 0;
  for (const auto& jsong : doc) {
    AlignedSong song = song_from_json(jsong, "$[" + std::to_string(i++) + "]");
    if (opts.validate) check_or_throw(song);
    corpus.push_back(std::move(song));
  }
  return corpus;
}

std::vector<AlignedSong> parse_jsonl(std::string_view bytes, const ParseOptions& opts) {
  std::vector<AlignedSong> corpus;
  std::size_t pos = 0;
  int record = 0;
  while (pos < bytes.size()) {
    std::size_t eol = bytes.find('\n', pos);
    if (eol == std::string_view::npos) eol = bytes.size();
    std::string_view line = bytes.substr(pos, eol - pos);
    bool blank = true;
    for (char c : line) {
      if (c != ' ' && c != '\t' && c != '\r') {
        blank = false;
        break;
      }
    }
    if (!blank) {
      ordered_json j;
      try {
        j = ordered_json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), pos + e.byte);
      }
      AlignedSong song = song_from_json(j, "$[" + std::to_string(record) + "]");
      if (opts.validate) check_or_throw(song);
      corpus.push_back(std::move(song));
      ++record;
    }
    pos = eol + 1;
  }
  return corpus;
}

ordered_json song_to_json(const AlignedSong& song) {
  ordered_json j;
  j["song_id"] = song.song_id;
  j["artist"] = song.artist;
  j["track"] = song.track;
  j["genre"] = std::string(to_string(song.genre));
  j["translation_status"] = std::string(to_string(song.translation_status));
  j["original_language"] = std::string(to_string(song.original_language));
  j["sections"] = ordered_json::array();
  for (const auto& sec : song.sections) {
    ordered_json jsec;
    jsec["lines"] = ordered_json::array();
    for (const auto& lp : sec.lines) {
      ordered_json jl;
      jl["en"] = lp.en;
      jl["kr"] = lp.kr;
      jsec["lines"].push_back(std::move(jl));
    }
    j["sections"].push_back(std::move(jsec));
  }
  return j;
}

}  // namespace

std::vector<AlignedSong> parse_corpus(std::string_view bytes, const ParseOptions& opts) {
  std::size_t i = 0;
  while (i < bytes.size() &&
         (bytes[i] == ' ' || bytes[i] == '\t' || bytes[i] == '\n' || bytes[i] == '\r')) {
    ++i;
  }
  if (i < bytes.size() && bytes[i] == '[') return parse_json_array(bytes, opts);
  return parse_jsonl(bytes, opts);
}

std::vector<AlignedSong> parse_corpus(std::istream& in, const ParseOptions& opts) {
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("I/O error while reading corpus stream");
  return parse_corpus(std::string_view(buf.view()), opts);
}

std::vector<AlignedSong> load_corpus(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path);
  return parse_corpus(in, opts);
}

std::vector<Violation> validate_alignment(const AlignedSong& song) {
  std::vector<Violation> out;
  const auto add = [&](int sec, int line, std::string rule, std::string detail) {
    out.push_back({song.song_id, sec, line, std::move(rule), std::move(detail)});
  };

  int expected_section = 1;
  int expected_line = 1;
  for (const auto& sec : song.sections) {
    if (sec.section_index != expected_section) {
      add(sec.section_index, 0, "contiguous-sections",
          "expected section index " + std::to_string(expected_section) + ", got " +
              std::to_string(sec.section_index));
      expected_section = sec.section_index;  // report each gap once
    }
    ++expected_section;
    if (sec.lines.empty()) {
      add(sec.section_index, 0, "non-empty-section", "section has no lines");
    }
    for (const auto& lp : sec.lines) {
      if (lp.line_index != expected_line) {
        add(sec.section_index, lp.line_index, "contiguous-lines",
            "expected line index " + std::to_string(expected_line) + ", got " +
                std::to_string(lp.line_index));
        expected_line = lp.line_index;
      }
      ++expected_line;
      if (uni::trim(lp.en).empty()) {
        add(sec.section_index, lp.line_index, "non-empty-line", "en text is empty");
      }
      if (uni::trim(lp.kr).empty()) {
        add(sec.section_index, lp.line_index, "non-empty-line", "kr text is empty");
      }
    }
  }
  return out;
}

std::string serialize_song(const AlignedSong& song) { return song_to_json(song).dump(); }

void serialize_corpus(const std::vector<AlignedSong>& corpus, std::ostream& out, bool jsonl) {
  if (jsonl) {
    for (const auto& song : corpus) out << song_to_json(song).dump() << '\n';
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& song : corpus) arr.push_back(song_to_json(song));
  out << arr.dump(2) << '\n';
}

CorpusStats corpus_stats(const std::vector<AlignedSong>& corpus) {
  CorpusStats st;
  std::unordered_set<std::string> sec_kr, sec_en, line_kr, line_en, vocab;
  for (const auto& song : corpus) {
    ++st.songs;
    for (const auto& sec : song.sections) {
      ++st.total_sections;
      std::string key_en, key_kr;
      for (const auto& lp : sec.lines) {
        ++st.total_lines;
        std::string en = uni::trim(uni::nfc(lp.en));
        std::string kr = uni::trim(uni::nfc(lp.kr));
        if (!key_en.empty()) key_en += '\n';
        if (!key_kr.empty()) key_kr += '\n';
        key_en += en;
        key_kr += kr;
        line_en.insert(en);
        line_kr.insert(kr);
        std::size_t pos = 0;
        while (pos < en.size()) {
          while (pos < en.size() && (en[pos] == ' ' || en[pos] == '\t')) ++pos;
          std::size_t start = pos;
          while (pos < en.size() && en[pos] != ' ' && en[pos] != '\t') ++pos;
          if (pos > start) vocab.insert(en.substr(start, pos - start));
        }
      }
      sec_en.insert(key_en);
      sec_kr.insert(key_kr);
    }
  }
  st.unique_sections_kr = static_cast<std::int64_t>(sec_kr.size());
  st.unique_sections_en = static_cast<std::int64_t>(sec_en.size());
  st.unique_lines_kr = static_cast<std::int64_t>(line_kr.size());
  st.unique_lines_en = static_cast<std::int64_t>(line_en.size());
  st.vocab_en = static_cast<std::int64_t>(vocab.size());
  return st;
}

std::string format_violation(const Violation& v) {
  std::string s = v.rule;
  if (v.section_index > 0) s += " [section " + std::to_string(v.section_index);
  if (v.line_index > 0) s += ", line " + std::to_string(v.line_index);
  if (v.section_index > 0) s += "]";
  if (!v.detail.empty()) s += ": " + v.detail;
  return s;
}

}  // namespace kelp
