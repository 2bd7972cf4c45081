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

#include "kelp/scd.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "kelp/error.hpp"

namespace kelp {

CountPairSeries CountPairSeries::from_counts(std::span<const std::pair<int, int>> raw) {
  CountPairSeries s;
  s.pairs.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    if (a >= 1 && b >= 1) {
      s.pairs.emplace_back(a, b);
    } else {
      ++s.skipped;
    }
  }
  return s;
}

double scd(const CountPairSeries& series) {
  if (series.pairs.empty()) throw DataError("empty series");
  double sum = 0.0;
  for (const auto& [s, t] : series.pairs) {
    const double diff = std::abs(static_cast<double>(s) - static_cast<double>(t));
    sum += diff / static_cast<double>(s) + diff / static_cast<double>(t);
  }
  return sum / (2.0 * static_cast<double>(series.pairs.size()));
}

double error_rate(const CountPairSeries& series) {
  if (series.pairs.empty()) throw DataError("empty series");
  int wrong = 0;
  for (const auto& [s, t] : series.pairs) {
    if (s != t) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(series.pairs.size());
}

ScdReport scd_report(const CountPairSeries& series) {
  ScdReport r;
  r.scd = scd(series);
  r.error_rate = error_rate(series);
  r.n_lines = static_cast<int>(series.pairs.size());
  r.skipped = series.skipped;
  return r;
}

CorpusScd corpus_scd(std::span<const GeneratedSong> songs, const PronouncingDict* dict,
                     bool pooled_error_rate, const SyllableOptions& opts) {
  CorpusScd agg;
  long pooled_wrong = 0, pooled_total = 0;
  double scd_sum = 0.0, er_sum = 0.0;
  std::vector<double> per_song_scd;

  for (const auto& song : songs) {
    if (song.source_lines.size() != song.generated_lines.size()) {
      throw DataError("song \"" + song.song_id + "\": source has " +
                      std::to_string(song.source_lines.size()) + " lines but generated has " +
                      std::to_string(song.generated_lines.size()));
    }
    std::vector<std::pair<int, int>> counts;
    counts.reserve(song.source_lines.size());
    for (std::size_t i = 0; i < song.source_lines.size(); ++i) {
      counts.emplace_back(count_syllables_line(song.source_lines[i], dict, opts).value,
                          count_syllables_line(song.generated_lines[i], dict, opts).value);
    }
    CountPairSeries series = CountPairSeries::from_counts(counts);
    if (series.pairs.empty()) {
      agg.skipped_songs.push_back(song.song_id);
      continue;
    }
    ScdReport r = scd_report(series);
    agg.rows.push_back({song.song_id, r.n_lines, r.scd, r.error_rate, r.skipped});
    per_song_scd.push_back(r.scd);
    scd_sum += r.scd;
    er_sum += r.error_rate;
    for (const auto& [s, t] : series.pairs) {
      ++pooled_total;
      if (s != t) ++pooled_wrong;
    }
  }

  agg.songs_scored = static_cast<int>(per_song_scd.size());
  if (agg.songs_scored > 0) {
    agg.scd_mean = scd_sum / agg.songs_scored;
    double sq = 0.0;
    for (double v : per_song_scd) sq += (v - agg.scd_mean) * (v - agg.scd_mean);
    agg.scd_std = std::sqrt(sq / agg.songs_scored);
    agg.error_rate_mean = pooled_error_rate
                              ? static_cast<double>(pooled_wrong) / pooled_total
                              : er_sum / agg.songs_scored;
  }
  return agg;
}

void write_scd_csv(const CorpusScd& agg, std::ostream& out) {
  out << "song_id,n_lines,scd,error_rate,skipped\n";
  char buf[64];
  for (const auto& row : agg.rows) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g", row.scd, row.error_rate);
    out << row.song_id << ',' << row.n_lines << ',' << buf << ',' << row.skipped << '\n';
  }
}

}  // namespace kelp
