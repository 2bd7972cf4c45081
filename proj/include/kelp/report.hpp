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

#ifndef KELP_REPORT_HPP_
#define KELP_REPORT_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kelp/corpus.hpp"
#include "kelp/phonetics.hpp"
#include "kelp/scd.hpp"
#include "kelp/semantics.hpp"

namespace kelp {

enum class Variant { included, excluded };
std::string_view to_string(Variant v);

// Non-owning bundle of everything the per-song metric pass needs. The stub
// backends are pure and may be shared across worker threads; remote HTTP
// clients are not, so thread_safe gates the song-level parallelism.
struct MetricBackends {
  EmbeddingBackend* embedding = nullptr;
  TranslationBackend* translation = nullptr;
  CoherenceScorer* coherence = nullptr;
  const PronouncingDict* dict = nullptr;
  bool thread_safe = true;
};

struct MetricSelection {
  bool sem = true;
  bool pho = true;
  bool scd = true;
  bool nsp = true;

  // "sem" | "pho" | "scd" | "nsp" | "all"
  static std::optional<MetricSelection> from_which(std::string_view which);
};

struct ReportOptions {
  MetricSelection which;
  bool official_only = false;
  bool pooled = false;  // line/section-pooled genre averaging
  SyllableOptions syllable;
  int jobs = 0;
};

// One song under one variant. Metrics that could not be computed (no
// backend, nothing scorable) stay unset. The per-unit vectors back pooled
// aggregation and the density output.
struct SongMetrics {
  std::string song_id;
  Genre genre = Genre::other;
  Variant variant = Variant::included;
  int sections = 0;
  int lines = 0;
  int excluded_lines = 0;

  std::optional<double> sem_line;
  std::optional<double> sem_sec;
  std::optional<double> pho_deg_en, pho_var_en;
  std::optional<double> pho_deg_kr, pho_var_kr;
  std::optional<double> scd_value;
  std::optional<double> error_rate;
  std::optional<double> nsp;
  int scd_skipped = 0;

  std::vector<double> line_sts;
  std::vector<double> sec_sts;
  std::vector<int> sec_weights;
  std::vector<double> sec_pho_en, sec_pho_kr;
  std::vector<std::pair<int, int>> count_pairs;
  std::vector<double> nsp_scores;
};

// Both variants per song, corpus order, excluded right after included.
// Deterministic for any jobs value.
std::vector<SongMetrics> compute_song_metrics(const std::vector<AlignedSong>& corpus,
                                              const MetricBackends& backends,
                                              const ReportOptions& options);

struct ReportRow {
  Genre genre = Genre::other;
  Variant variant = Variant::included;
  std::optional<double> sem_line, sem_sec;
  std::optional<double> pho_deg_en, pho_deg_kr, pho_var_en, pho_var_kr;
  std::optional<double> scd, error_rate, nsp;
  int songs = 0;
  long lines = 0;
};

struct MetricReport {
  std::vector<ReportRow> rows;
  std::vector<std::string> warnings;
};

// Per-genre aggregation of per-song metrics, one row per (genre, variant)
// present in the corpus. Default averaging is per-song-then-genre; pooled
// averages over lines/sections/pairs instead.
MetricReport genre_report(const std::vector<AlignedSong>& corpus, const MetricBackends& backends,
                          const ReportOptions& options);
MetricReport genre_report_from_songs(std::span<const SongMetrics> songs,
                                     const ReportOptions& options);

struct DensityRow {
  Genre genre = Genre::other;
  Variant variant = Variant::included;
  double sts = 0.0;
};

// One row per scored line, both variants, corpus order.
std::vector<DensityRow> density_data(const std::vector<AlignedSong>& corpus,
                                     const MetricBackends& backends,
                                     const ReportOptions& options);

void write_metric_report_csv(const MetricReport& report, std::ostream& out);
void write_metric_report_json(const MetricReport& report, std::ostream& out);
void write_song_metrics_csv(std::span<const SongMetrics> songs, std::ostream& out);
void write_density_csv(std::span<const DensityRow> rows, std::ostream& out);

}  // namespace kelp

#endif  // KELP_REPORT_HPP_
