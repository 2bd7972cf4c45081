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

#include "kelp/semantics.hpp"

#include <cmath>
#include <cstdint>

#include "kelp/error.hpp"
#include "kelp/unicode.hpp"

namespace kelp {

namespace {

// FNV-1a with an offset basis fixed for this project so stub vectors are
// stable across platforms and versions.
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;
constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL ^ 0x6B656C70ULL;

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

void normalize_l2(std::vector<double>& v) {
  double sq = 0.0;
  for (double x : v) sq += x * x;
  if (sq <= 0.0) return;  // zero vector stays zero
  const double inv = 1.0 / std::sqrt(sq);
  for (double& x : v) x *= inv;
}

std::vector<double> stub_vector(std::string_view text) {
  std::vector<double> v(StubEmbedding::kDim, 0.0);
  if (text.empty()) return v;
  if (text.size() < 3) {
    v[fnv1a(text) % StubEmbedding::kDim] += 1.0;
  } else {
    for (std::size_t i = 0; i + 3 <= text.size(); ++i) {
      v[fnv1a(text.substr(i, 3)) % StubEmbedding::kDim] += 1.0;
    }
  }
  normalize_l2(v);
  return v;
}

std::string join_lines(const Section& sec, Lang side) {
  std::string out;
  for (const auto& lp : sec.lines) {
    if (!out.empty()) out += ' ';
    out += lp.text(side);
  }
  return out;
}

// Batched translate-then-embed over an ordered list of texts; results are
// repositioned by index so backend batching cannot reorder them.
std::vector<std::vector<double>> embed_pipeline(std::vector<std::string> texts,
                                                EmbeddingBackend& emb, TranslationBackend& tr) {
  std::vector<std::size_t> needs_translation;
  std::vector<std::string> to_translate;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (uni::contains_hangul(texts[i])) {
      needs_translation.push_back(i);
      to_translate.push_back(texts[i]);
    }
  }
  if (!to_translate.empty()) {
    std::vector<std::string> translated = tr.translate(to_translate, "ko", "en");
    if (translated.size() != to_translate.size()) {
      throw TransportError("translation backend returned " + std::to_string(translated.size()) +
                               " texts for " + std::to_string(to_translate.size()) + " inputs",
                           false, 1);
    }
    for (std::size_t k = 0; k < needs_translation.size(); ++k) {
      texts[needs_translation[k]] = std::move(translated[k]);
    }
  }
  std::vector<std::vector<double>> vecs = emb.embed(texts);
  if (vecs.size() != texts.size()) {
    throw TransportError("embedding backend returned " + std::to_string(vecs.size()) +
                             " vectors for " + std::to_string(texts.size()) + " inputs",
                         false, 1);
  }
  return vecs;
}

}  // namespace

double CoherenceScorer::score(const std::string& prev, const std::string& next) {
  return score_pairs({{prev, next}}).at(0);
}

std::vector<std::vector<double>> StubEmbedding::embed(const std::vector<std::string>& texts) {
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(stub_vector(t));
  return out;
}

std::size_t StubEmbedding::bucket_of(std::string_view gram) { return fnv1a(gram) % kDim; }

std::vector<std::string> StubTranslation::translate(const std::vector<std::string>& texts,
                                                    std::string_view, std::string_view) {
  return texts;
}

std::vector<double> StubCoherence::score_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& [prev, next] : pairs) {
    std::vector<double> a = stub_vector(prev);
    std::vector<double> b = stub_vector(next);
    double c = cosine(a, b);
    out.push_back(c < 0.0 ? 0.0 : (c > 1.0 ? 1.0 : c));
  }
  return out;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DataError("cosine of vectors with different dimensions");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

double sts(std::string_view a, std::string_view b, EmbeddingBackend& emb, TranslationBackend& tr) {
  auto vecs = embed_pipeline({std::string(a), std::string(b)}, emb, tr);
  return cosine(vecs[0], vecs[1]);
}

SemReport sem_line(const AlignedSong& song, EmbeddingBackend& emb, TranslationBackend& tr,
                   bool exclude_untranslated) {
  SemReport report;
  const AlignedSong* working = &song;
  AlignedSong filtered;
  if (exclude_untranslated) {
    auto [f, excluded] = filter_untranslated(song);
    filtered = std::move(f);
    report.excluded_line_count = static_cast<int>(excluded.size());
    working = &filtered;
  }

  std::vector<std::string> texts;
  for (const auto& sec : working->sections) {
    for (const auto& lp : sec.lines) {
      texts.push_back(lp.kr);
      texts.push_back(lp.en);
    }
  }
  if (texts.empty()) throw DataError("no lines to score in song \"" + song.song_id + "\"");

  auto vecs = embed_pipeline(std::move(texts), emb, tr);
  const std::size_t n = vecs.size() / 2;
  double sum = 0.0;
  report.per_unit_sts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = cosine(vecs[2 * i], vecs[2 * i + 1]);
    report.per_unit_sts.push_back(v);
    sum += v;
  }
  report.sem_line = sum / static_cast<double>(n);
  return report;
}

SemReport sem_sec(const AlignedSong& song, EmbeddingBackend& emb, TranslationBackend& tr,
                  bool exclude_untranslated) {
  SemReport report;
  const AlignedSong* working = &song;
  AlignedSong filtered;
  if (exclude_untranslated) {
    auto [f, excluded] = filter_untranslated(song);
    filtered = std::move(f);
    report.excluded_line_count = static_cast<int>(excluded.size());
    working = &filtered;
  }
  if (working->sections.empty()) {
    throw DataError("no sections to score in song \"" + song.song_id + "\"");
  }

  std::vector<std::string> texts;
  std::vector<long> weights;
  long n = 0;
  for (const auto& sec : working->sections) {
    texts.push_back(join_lines(sec, Lang::kr));
    texts.push_back(join_lines(sec, Lang::en));
    weights.push_back(static_cast<long>(sec.lines.size()));
    n += weights.back();
  }

  // Integer identity behind the Eq. 2 weights: the section sizes must
  // partition the line count exactly.
  long check = 0;
  for (long w : weights) check += w;
  if (check != n || n <= 0) throw DataError("section sizes do not partition the song");

  auto vecs = embed_pipeline(std::move(texts), emb, tr);
  double acc = 0.0;
  report.per_unit_sts.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double v = cosine(vecs[2 * i], vecs[2 * i + 1]);
    report.per_unit_sts.push_back(v);
    acc += (static_cast<double>(weights[i]) / static_cast<double>(n)) * v;
  }
  report.sem_sec = acc;
  return report;
}

std::string untranslated_key(std::string_view text) {
  std::u32string cps = uni::decode_utf8(uni::nfc(text));
  std::u32string kept;
  kept.reserve(cps.size());
  for (char32_t cp : cps) {
    if (uni::is_punct(cp)) continue;
    if (cp >= U'A' && cp <= U'Z') cp += 32;
    kept.push_back(cp);
  }
  return uni::collapse_whitespace(uni::encode_utf8(kept));
}

std::pair<AlignedSong, std::vector<int>> filter_untranslated(const AlignedSong& song) {
  AlignedSong out = song;
  out.sections.clear();
  std::vector<int> excluded;
  int line_index = 0;
  for (const auto& sec : song.sections) {
    Section kept;
    for (const auto& lp : sec.lines) {
      if (untranslated_key(lp.en) == untranslated_key(lp.kr)) {
        excluded.push_back(lp.line_index);
      } else {
        kept.lines.push_back(lp);
        kept.lines.back().line_index = ++line_index;
      }
    }
    if (!kept.lines.empty()) {
      kept.section_index = static_cast<int>(out.sections.size()) + 1;
      out.sections.push_back(std::move(kept));
    }
  }
  return {std::move(out), std::move(excluded)};
}

double coherence_nsp(std::span<const std::string> lines, CoherenceScorer& scorer) {
  if (lines.size() < 2) throw DataError("need two lines");
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(lines.size() - 1);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    pairs.emplace_back(lines[i], lines[i + 1]);
  }
  std::vector<double> scores = scorer.score_pairs(pairs);
  if (scores.size() != pairs.size()) {
    throw TransportError("coherence scorer returned " + std::to_string(scores.size()) +
                             " scores for " + std::to_string(pairs.size()) + " pairs",
                         false, 1);
  }
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

}  // namespace kelp
