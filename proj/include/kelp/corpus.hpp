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

#ifndef KELP_CORPUS_HPP_
#define KELP_CORPUS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace kelp {

enum class Genre { kpop, animation, theatre, other };
enum class TranslationStatus { official, unofficial };
enum class Lang { en, kr };

std::string_view to_string(Genre g);
std::string_view to_string(TranslationStatus s);
std::string_view to_string(Lang l);

// One melody line in both language versions. line_index is 1-based and
// global within the song.
struct LinePair {
  std::string en;
  std::string kr;
  int line_index = 0;

  const std::string& text(Lang side) const { return side == Lang::en ? en : kr; }
};

struct Section {
  int section_index = 0;
  std::vector<LinePair> lines;
};

struct AlignedSong {
  std::string song_id;
  std::string artist;
  std::string track;
  Genre genre = Genre::other;
  TranslationStatus translation_status = TranslationStatus::official;
  Lang original_language = Lang::kr;
  std::vector<Section> sections;

  int line_count() const;
  int section_count() const { return static_cast<int>(sections.size()); }
};

// A broken alignment invariant. section_index/line_index are 0 when the rule
// is not scoped to a section or line.
struct Violation {
  std::string song_id;
  int section_index = 0;
  int line_index = 0;
  std::string rule;
  std::string detail;
};

struct CorpusStats {
  std::int64_t songs = 0;
  std::int64_t total_sections = 0;
  std::int64_t unique_sections_kr = 0;
  std::int64_t unique_sections_en = 0;
  std::int64_t total_lines = 0;
  std::int64_t unique_lines_kr = 0;
  std::int64_t unique_lines_en = 0;
  std::int64_t vocab_en = 0;
};

struct ParseOptions {
  // When true, any alignment violation aborts the parse with AlignmentError.
  // The validate command turns this off to report violations as data.
  bool validate = true;
};

// Accepts a JSON array of song objects or JSONL (one song object per line).
// Text fields are NFC-normalized on load; indices are assigned from array
// order. Throws ParseError / SchemaError / AlignmentError.
std::vector<AlignedSong> parse_corpus(std::istream& in, const ParseOptions& opts = {});
std::vector<AlignedSong> parse_corpus(std::string_view bytes, const ParseOptions& opts = {});
std::vector<AlignedSong> load_corpus(const std::string& path, const ParseOptions& opts = {});

// Empty result means every invariant holds.
std::vector<Violation> validate_alignment(const AlignedSong& song);

std::string serialize_song(const AlignedSong& song);
void serialize_corpus(const std::vector<AlignedSong>& corpus, std::ostream& out,
                      bool jsonl = false);

// Uniqueness is exact string equality after NFC normalization and trimming;
// English vocabulary is whitespace tokenization, no case folding.
CorpusStats corpus_stats(const std::vector<AlignedSong>& corpus);

std::string format_violation(const Violation& v);

}  // namespace kelp

#endif  // KELP_CORPUS_HPP_
