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

#ifndef KELP_PREPROCESS_HPP_
#define KELP_PREPROCESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kelp/cmudict.hpp"
#include "kelp/corpus.hpp"
#include "kelp/syllable.hpp"

namespace kelp {

enum class Scheme { general_line, general_section, lyrics_line, lyrics_section };
enum class SylMode { with_syl, without_syl };

std::string_view to_string(Scheme s);
std::optional<Scheme> scheme_from_string(std::string_view s);

// Control token surface forms are literal ASCII with a single following
// space; "<SYL7> ..." / "... <SEP> ...". The syllable value always measures
// the English span it precedes, never the Korean side.
std::string syl_token(int count);
inline constexpr std::string_view kSepToken = "<SEP>";

struct TrainingPair {
  std::string source;  // Korean side
  std::string target;  // English side
  Scheme scheme = Scheme::lyrics_line;
  SylMode syl_mode = SylMode::with_syl;
};

struct ShuffleSeed {
  std::uint64_t seed = 0;
};

struct SentencePair {
  std::string kr;
  std::string en;
};

// Identical seed and input give the identical permutation on every platform;
// std::shuffle is implementation-defined, so the Fisher-Yates draws come
// straight from std::mt19937_64.
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// nullopt when the English side has zero syllables (the caller counts the
// drop).
std::optional<TrainingPair> annotate_line(const SentencePair& pair, SylMode mode,
                                          const PronouncingDict* dict = nullptr,
                                          const SyllableOptions& opts = {});

struct SectionAnnotation {
  std::optional<TrainingPair> pair;
  int dropped_lines = 0;
};

// One data unit per section. The optional seed shuffles the lines, applying
// one permutation to both languages. with_syl prefixes every line on both
// sides with that English line's count, joined by single spaces; without_syl
// joins lines with " <SEP> ".
SectionAnnotation annotate_section(std::span<const SentencePair> lines, SylMode mode,
                                   std::optional<ShuffleSeed> seed,
                                   const PronouncingDict* dict = nullptr,
                                   const SyllableOptions& opts = {});

// Draws n in {1..4} (capped by each side's word count), splits each side
// independently at uniform word boundaries, prefixes segment j on both sides
// with the English segment's count. Never fails. Draw order: n, then English
// boundaries, then Korean boundaries.
TrainingPair segment_general(const SentencePair& pair, SylMode mode, std::mt19937_64& rng,
                             const PronouncingDict* dict = nullptr,
                             const SyllableOptions& opts = {});

struct PreprocessOptions {
  Scheme scheme = Scheme::lyrics_line;
  SylMode syl_mode = SylMode::with_syl;
  std::uint64_t seed = 42;
  bool shuffle_sections = true;  // lyrics_section only
  SyllableOptions syllable;
};

struct EmitStats {
  long records = 0;
  long dropped_lines = 0;
  long dropped_sections = 0;
};

// JSONL, one {"source": ..., "target": ...} object per record, UTF-8, in
// input order; byte-identical for identical input and seed. The corpus
// overload serves the lyrics_* schemes, the sentence-pair overload the
// general_* schemes.
EmitStats emit_training_file(const std::vector<AlignedSong>& corpus,
                             const PreprocessOptions& options, const PronouncingDict* dict,
                             std::ostream& out);
EmitStats emit_training_file(std::span<const SentencePair> pairs,
                             const PreprocessOptions& options, const PronouncingDict* dict,
                             std::ostream& out);

// Two-column TSV: Korean<TAB>English, one pair per line, NFC-normalized.
std::vector<SentencePair> load_sentence_pairs_tsv(std::istream& in);
std::vector<SentencePair> load_sentence_pairs_tsv_file(const std::string& path);

// Inverse of the annotators for single-spaced input: strips <SYLn>/<SEP>
// tokens and returns the recovered spans with the syllable values in order.
struct ParsedTraining {
  std::vector<std::string> spans;
  std::vector<int> syl_values;
};
ParsedTraining parse_training_text(std::string_view text);

}  // namespace kelp

#endif  // KELP_PREPROCESS_HPP_
