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

#include "kelp/preprocess.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "kelp/error.hpp"
#include "kelp/unicode.hpp"

namespace kelp {

namespace {

std::vector<std::string> words_of(std::string_view text) {
  std::vector<std::string> out;
  std::u32string cps = uni::decode_utf8(text);
  std::u32string cur;
  for (char32_t cp : cps) {
    if (uni::is_space(cp)) {
      if (!cur.empty()) {
        out.push_back(uni::encode_utf8(cur));
        cur.clear();
      }
    } else {
      cur.push_back(cp);
    }
  }
  if (!cur.empty()) out.push_back(uni::encode_utf8(cur));
  return out;
}

std::string join(std::span<const std::string> words, std::size_t begin, std::size_t end,
                 std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += sep;
    out += words[i];
  }
  return out;
}

// k distinct boundaries from {1..w-1}, sorted. A full deterministic shuffle
// keeps the draw count a function of w alone.
std::vector<std::size_t> draw_boundaries(std::size_t word_count, std::size_t k,
                                         std::mt19937_64& rng) {
  std::vector<std::size_t> all;
  for (std::size_t b = 1; b < word_count; ++b) all.push_back(b);
  for (std::size_t i = all.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(all[i - 1], all[j]);
  }
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

std::string annotate_side(std::span<const std::string> spans, std::span<const int> counts,
                          SylMode mode) {
  const std::string sep = " " + std::string(kSepToken) + " ";
  std::string out;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (i > 0) out += (mode == SylMode::with_syl) ? " " : sep;
    if (mode == SylMode::with_syl) {
      out += syl_token(counts[i]);
      out += ' ';
    }
    out += spans[i];
  }
  return out;
}

}  // namespace

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::general_line: return "general_line";
    case Scheme::general_section: return "general_section";
    case Scheme::lyrics_line: return "lyrics_line";
    case Scheme::lyrics_section: return "lyrics_section";
  }
  return "lyrics_line";
}

std::optional<Scheme> scheme_from_string(std::string_view s) {
  if (s == "general_line") return Scheme::general_line;
  if (s == "general_section") return Scheme::general_section;
  if (s == "lyrics_line") return Scheme::lyrics_line;
  if (s == "lyrics_section") return Scheme::lyrics_section;
  return std::nullopt;
}

std::string syl_token(int count) { return "<SYL" + std::to_string(count) + ">"; }

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over master + golden-ratio stride.
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::optional<TrainingPair> annotate_line(const SentencePair& pair, SylMode mode,
                                          const PronouncingDict* dict,
                                          const SyllableOptions& opts) {
  const std::string en = uni::trim(pair.en);
  const std::string kr = uni::trim(pair.kr);
  const int s = count_syllables_line(en, dict, opts).value;
  if (s == 0) return std::nullopt;

  TrainingPair tp;
  tp.syl_mode = mode;
  if (mode == SylMode::with_syl) {
    tp.source = syl_token(s) + " " + kr;
    tp.target = syl_token(s) + " " + en;
  } else {
    tp.source = kr;
    tp.target = en;
  }
  return tp;
}

SectionAnnotation annotate_section(std::span<const SentencePair> lines, SylMode mode,
                                   std::optional<ShuffleSeed> seed, const PronouncingDict* dict,
                                   const SyllableOptions& opts) {
  SectionAnnotation result;
  std::vector<std::string> en_lines, kr_lines;
  std::vector<int> counts;
  for (const auto& pair : lines) {
    std::string en = uni::trim(pair.en);
    std::string kr = uni::trim(pair.kr);
    int s = count_syllables_line(en, dict, opts).value;
    if (s == 0) {
      ++result.dropped_lines;
      continue;
    }
    en_lines.push_back(std::move(en));
    kr_lines.push_back(std::move(kr));
    counts.push_back(s);
  }
  if (en_lines.empty()) return result;

  if (seed.has_value()) {
    std::vector<std::size_t> perm = shuffled_indices(en_lines.size(), seed->seed);
    std::vector<std::string> en2, kr2;
    std::vector<int> c2;
    for (std::size_t i : perm) {
      en2.push_back(std::move(en_lines[i]));
      kr2.push_back(std::move(kr_lines[i]));
      c2.push_back(counts[i]);
    }
    en_lines = std::move(en2);
    kr_lines = std::move(kr2);
    counts = std::move(c2);
  }

  TrainingPair tp;
  tp.scheme = Scheme::lyrics_section;
  tp.syl_mode = mode;
  tp.source = annotate_side(kr_lines, counts, mode);
  tp.target = annotate_side(en_lines, counts, mode);
  result.pair = std::move(tp);
  return result;
}

TrainingPair segment_general(const SentencePair& pair, SylMode mode, std::mt19937_64& rng,
                             const PronouncingDict* dict, const SyllableOptions& opts) {
  const std::vector<std::string> en_words = words_of(uni::trim(pair.en));
  const std::vector<std::string> kr_words = words_of(uni::trim(pair.kr));

  std::size_t n = static_cast<std::size_t>(rng() % 4) + 1;
  n = std::min({n, en_words.size(), kr_words.size()});
  if (n == 0) n = 1;

  std::vector<std::size_t> en_cuts = draw_boundaries(en_words.size(), n - 1, rng);
  std::vector<std::size_t> kr_cuts = draw_boundaries(kr_words.size(), n - 1, rng);

  const auto segments = [](std::span<const std::string> words,
                           std::span<const std::size_t> cuts) {
    std::vector<std::string> segs;
    std::size_t begin = 0;
    for (std::size_t cut : cuts) {
      segs.push_back(join(words, begin, cut));
      begin = cut;
    }
    segs.push_back(join(words, begin, words.size()));
    return segs;
  };
  std::vector<std::string> en_segs = segments(en_words, en_cuts);
  std::vector<std::string> kr_segs = segments(kr_words, kr_cuts);

  std::vector<int> counts;
  counts.reserve(en_segs.size());
  for (const auto& seg : en_segs) {
    counts.push_back(count_syllables_line(seg, dict, opts).value);
  }

  TrainingPair tp;
  tp.scheme = Scheme::general_section;
  tp.syl_mode = mode;
  tp.source = annotate_side(kr_segs, counts, mode);
  tp.target = annotate_side(en_segs, counts, mode);
  return tp;
}

namespace {

void write_record(const TrainingPair& tp, std::ostream& out) {
  nlohmann::ordered_json j;
  j["source"] = tp.source;
  j["target"] = tp.target;
  out << j.dump() << '\n';
  if (!out) throw Error("I/O error while writing training records");
}

}  // namespace

EmitStats emit_training_file(const std::vector<AlignedSong>& corpus,
                             const PreprocessOptions& options, const PronouncingDict* dict,
                             std::ostream& out) {
  if (options.scheme != Scheme::lyrics_line && options.scheme != Scheme::lyrics_section) {
    throw ConfigError("corpus input serves the lyrics_* schemes; use a TSV of sentence pairs "
                      "for general_*");
  }
  EmitStats stats;
  std::uint64_t unit = 0;
  for (const auto& song : corpus) {
    for (const auto& sec : song.sections) {
      if (options.scheme == Scheme::lyrics_line) {
        for (const auto& lp : sec.lines) {
          auto tp = annotate_line({lp.kr, lp.en}, options.syl_mode, dict, options.syllable);
          if (!tp) {
            ++stats.dropped_lines;
            continue;
          }
          tp->scheme = Scheme::lyrics_line;
          write_record(*tp, out);
          ++stats.records;
        }
        continue;
      }
      std::vector<SentencePair> lines;
      lines.reserve(sec.lines.size());
      for (const auto& lp : sec.lines) lines.push_back({lp.kr, lp.en});
      std::optional<ShuffleSeed> seed;
      if (options.shuffle_sections) {
        seed = ShuffleSeed{derive_seed(options.seed, unit)};
      }
      ++unit;
      SectionAnnotation ann =
          annotate_section(lines, options.syl_mode, seed, dict, options.syllable);
      stats.dropped_lines += ann.dropped_lines;
      if (!ann.pair) {
        ++stats.dropped_sections;
        continue;
      }
      write_record(*ann.pair, out);
      ++stats.records;
    }
  }
  return stats;
}

EmitStats emit_training_file(std::span<const SentencePair> pairs,
                             const PreprocessOptions& options, const PronouncingDict* dict,
                             std::ostream& out) {
  if (options.scheme != Scheme::general_line && options.scheme != Scheme::general_section) {
    throw ConfigError("sentence-pair input serves the general_* schemes; use a corpus for "
                      "lyrics_*");
  }
  EmitStats stats;
  std::uint64_t unit = 0;
  for (const auto& pair : pairs) {
    if (options.scheme == Scheme::general_line) {
      auto tp = annotate_line(pair, options.syl_mode, dict, options.syllable);
      ++unit;
      if (!tp) {
        ++stats.dropped_lines;
        continue;
      }
      tp->scheme = Scheme::general_line;
      write_record(*tp, out);
      ++stats.records;
      continue;
    }
    std::mt19937_64 rng(derive_seed(options.seed, unit));
    ++unit;
    TrainingPair tp = segment_general(pair, options.syl_mode, rng, dict, options.syllable);
    write_record(tp, out);
    ++stats.records;
  }
  return stats;
}

std::vector<SentencePair> load_sentence_pairs_tsv(std::istream& in) {
  std::vector<SentencePair> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("sentence-pair line " + std::to_string(lineno) +
                           " is not Korean<TAB>English",
                       static_cast<std::size_t>(lineno));
    }
    pairs.push_back({uni::nfc(line.substr(0, tab)), uni::nfc(line.substr(tab + 1))});
  }
  return pairs;
}

std::vector<SentencePair> load_sentence_pairs_tsv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open sentence-pair file: " + path);
  return load_sentence_pairs_tsv(in);
}

ParsedTraining parse_training_text(std::string_view text) {
  ParsedTraining parsed;
  std::string span;
  bool in_span = false;
  const auto flush = [&] {
    if (in_span) parsed.spans.push_back(span);
    span.clear();
    in_span = false;
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t space = text.find(' ', pos);
    if (space == std::string_view::npos) space = text.size();
    std::string_view word = text.substr(pos, space - pos);
    bool is_syl = word.size() > 5 && word.rfind("<SYL", 0) == 0 && word.back() == '>';
    if (is_syl) {
      for (std::size_t i = 4; i + 1 < word.size(); ++i) {
        if (word[i] < '0' || word[i] > '9') {
          is_syl = false;
          break;
        }
      }
    }
    if (word == kSepToken) {
      flush();
    } else if (is_syl) {
      flush();
      parsed.syl_values.push_back(std::stoi(std::string(word.substr(4, word.size() - 5))));
      in_span = true;  // a token opens a span even if it stays empty
    } else if (!word.empty()) {
      if (!span.empty()) span += ' ';
      span += word;
      in_span = true;
    }
    if (space == text.size()) break;
    pos = space + 1;
  }
  flush();
  return parsed;
}

}  // namespace kelp
