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

#ifndef KELP_SCD_HPP_
#define KELP_SCD_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kelp/cmudict.hpp"
#include "kelp/syllable.hpp"

namespace kelp {

// Aligned per-line syllable counts. Pairs with a zero on either side cannot
// enter the distance formula and are dropped at construction; skipped keeps
// the tally visible in reports.
struct CountPairSeries {
  std::vector<std::pair<int, int>> pairs;  // all entries >= 1
  int skipped = 0;

  static CountPairSeries from_counts(std::span<const std::pair<int, int>> raw);
};

// (1/2n) * sum_i (|s_i - t_i|/s_i + |s_i - t_i|/t_i). Throws DataError on an
// empty series.
double scd(const CountPairSeries& series);

// Fraction of stored pairs with unequal counts.
double error_rate(const CountPairSeries& series);

struct ScdReport {
  double scd = 0.0;
  double error_rate = 0.0;
  int n_lines = 0;
  int skipped = 0;
};

ScdReport scd_report(const CountPairSeries& series);

// Source lines paired with generated lines, index-aligned.
struct GeneratedSong {
  std::string song_id;
  std::vector<std::string> source_lines;
  std::vector<std::string> generated_lines;
};

struct SongScdRow {
  std::string song_id;
  int n_lines = 0;
  double scd = 0.0;
  double error_rate = 0.0;
  int skipped = 0;
};

struct CorpusScd {
  double scd_mean = 0.0;
  double scd_std = 0.0;  // population standard deviation of per-song SCDs
  double error_rate_mean = 0.0;
  int songs_scored = 0;
  std::vector<std::string> skipped_songs;  // zero scorable lines
  std::vector<SongScdRow> rows;
};

// Per-song SCD via the syllable counter on both sides, then mean/std across
// songs. pooled_error_rate switches the error rate from song-averaged to
// line-pooled.
CorpusScd corpus_scd(std::span<const GeneratedSong> songs, const PronouncingDict* dict = nullptr,
                     bool pooled_error_rate = false, const SyllableOptions& opts = {});

// CSV: song_id,n_lines,scd,error_rate,skipped
void write_scd_csv(const CorpusScd& agg, std::ostream& out);

}  // namespace kelp

#endif  // KELP_SCD_HPP_
