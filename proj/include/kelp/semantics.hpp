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

#ifndef KELP_SEMANTICS_HPP_
#define KELP_SEMANTICS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kelp/corpus.hpp"

namespace kelp {

// Sentence embedding model. Implementations must be deterministic for a
// given instance and return L2-normalized vectors (within 1e-6).
class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;
  virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;
};

class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;
  // Returns exactly one output per input.
  virtual std::vector<std::string> translate(const std::vector<std::string>& texts,
                                             std::string_view source_lang,
                                             std::string_view target_lang) = 0;
};

// Next-line coherence probability in [0, 1].
class CoherenceScorer {
 public:
  virtual ~CoherenceScorer() = default;
  virtual std::vector<double> score_pairs(
      const std::vector<std::pair<std::string, std::string>>& pairs) = 0;
  double score(const std::string& prev, const std::string& next);
};

// Offline deterministic embedding: 256-dim feature-hashed character-3-gram
// counts over the UTF-8 bytes, L2-normalized, fixed hash constant. Texts
// shorter than three bytes hash as a single whole-text feature.
class StubEmbedding : public EmbeddingBackend {
 public:
  static constexpr int kDim = 256;
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;
  // Exposed so tests can verify bucket-disjointness of chosen fixtures.
  static std::size_t bucket_of(std::string_view gram);
};

// Identity translation: deterministic offline stand-in.
class StubTranslation : public TranslationBackend {
 public:
  std::vector<std::string> translate(const std::vector<std::string>& texts,
                                     std::string_view source_lang,
                                     std::string_view target_lang) override;
};

// Hashed-3-gram cosine of the two lines; deterministic, in [0, 1].
class StubCoherence : public CoherenceScorer {
 public:
  std::vector<double> score_pairs(
      const std::vector<std::pair<std::string, std::string>>& pairs) override;
};

struct SemReport {
  std::optional<double> sem_line;
  std::optional<double> sem_sec;
  int excluded_line_count = 0;
  // Per scored line for sem_line (density output); per scored section for
  // sem_sec.
  std::vector<double> per_unit_sts;
};

double cosine(std::span<const double> a, std::span<const double> b);

// Hangul-bearing inputs are machine-translated to English first, then both
// texts are embedded and compared by cosine similarity.
double sts(std::string_view a, std::string_view b, EmbeddingBackend& emb, TranslationBackend& tr);

// Mean per-line sts, uniform 1/n weights. Throws DataError when no line
// remains to score.
SemReport sem_line(const AlignedSong& song, EmbeddingBackend& emb, TranslationBackend& tr,
                   bool exclude_untranslated);

// Per-section sts on space-joined section text, weighted n(X_i)/n.
SemReport sem_sec(const AlignedSong& song, EmbeddingBackend& emb, TranslationBackend& tr,
                  bool exclude_untranslated);

// Drops line pairs whose en and kr are equal after NFC, case folding,
// punctuation stripping and whitespace collapsing; drops sections emptied by
// that; re-derives indices. Returns the filtered song and the original
// 1-based indices of the removed lines.
std::pair<AlignedSong, std::vector<int>> filter_untranslated(const AlignedSong& song);

// The normalized form used by filter_untranslated (exposed for tests).
std::string untranslated_key(std::string_view text);

// Mean pair probability over consecutive lines; needs >= 2 lines.
double coherence_nsp(std::span<const std::string> lines, CoherenceScorer& scorer);

}  // namespace kelp

#endif  // KELP_SEMANTICS_HPP_
