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

#ifndef KELP_PHONETICS_HPP_
#define KELP_PHONETICS_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kelp/cmudict.hpp"
#include "kelp/corpus.hpp"

namespace kelp {

inline constexpr std::string_view kEos = "<eos>";

// Phoneme labels for one or more lines; every line is terminated by one
// "<eos>" token.
struct PhonemeSequence {
  std::vector<std::string> tokens;
  int line_count = 0;
};

// (initial, medial, final) jamo indices of a precomposed Hangul block.
// final_index 0 means no final consonant.
struct JamoIndices {
  int initial = 0;
  int medial = 0;
  int final_index = 0;
};

// index = cp - 0xAC00; initial = index / 588; medial = (index % 588) / 28;
// final = index % 28. Returns nullopt outside U+AC00..U+D7A3.
std::optional<JamoIndices> decompose_hangul(char32_t cp);
char32_t compose_hangul(const JamoIndices& j);

// Romanization-style label per jamo. The silent initial (ㅇ) and the empty
// final are empty strings and emit no phone. No cross-syllable sound rules
// are applied; this is a fixed deterministic inventory, not a Korean
// pronunciation model.
struct JamoPhoneTable {
  std::array<std::string, 19> initials;
  std::array<std::string, 21> medials;
  std::array<std::string, 28> finals;

  static const JamoPhoneTable& defaults();
  // TSV override: one "jamo<TAB>label" pair per line, keyed by the
  // conjoining jamo code points (U+1100.., U+1161.., U+11A8..). Unlisted
  // jamo keep their default label. Lines starting with '#' are comments.
  static JamoPhoneTable load_tsv(std::istream& in);
};

// Dictionary lookup (first pronunciation, stress stripped) with a
// deterministic letter-to-sound fallback for out-of-vocabulary tokens.
PhonemeSequence phonemize_english(std::string_view line, const PronouncingDict* dict = nullptr);

// Hangul blocks decompose arithmetically to jamo phones; Latin runs delegate
// to the English path.
PhonemeSequence phonemize_korean(std::string_view line, const PronouncingDict* dict = nullptr,
                                 const JamoPhoneTable& table = JamoPhoneTable::defaults());

// Distinct-over-total phoneme bigram ratio over the section's concatenated
// token stream, <eos> included as an ordinary token so bigrams span line
// boundaries. nullopt when the stream has fewer than two tokens.
std::optional<double> pho(std::span<const PhonemeSequence> section_lines);

struct PhoProfile {
  std::vector<double> per_section;  // scored sections only
  double pho_deg = 0.0;             // mean
  double pho_var = 0.0;             // population standard deviation
};

// Mean / population-sigma aggregation of per-section pho values.
PhoProfile make_pho_profile(std::vector<double> per_section);

// Throws DataError when no section is scorable.
PhoProfile pho_profile(const AlignedSong& song, Lang side, const PronouncingDict* dict = nullptr,
                       const JamoPhoneTable& table = JamoPhoneTable::defaults());

}  // namespace kelp

#endif  // KELP_PHONETICS_HPP_
