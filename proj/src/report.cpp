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

#include "kelp/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "kelp/error.hpp"
#include "kelp/parallel.hpp"

namespace kelp {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

struct WorkItem {
  const AlignedSong* song = nullptr;  // already filtered for the excluded variant
  AlignedSong filtered;
  Variant variant = Variant::included;
  int excluded_lines = 0;
};

void compute_one(const WorkItem& item, const MetricBackends& b, const ReportOptions& o,
                 SongMetrics& m) {
  const AlignedSong& song = item.variant == Variant::included ? *item.song : item.filtered;
  m.song_id = item.song->song_id;
  m.genre = item.song->genre;
  m.variant = item.variant;
  m.excluded_lines = item.excluded_lines;
  m.sections = song.section_count();
  m.lines = song.line_count();
  if (m.lines == 0) return;

  if (o.which.pho) {
    try {
      PhoProfile en = pho_profile(song, Lang::en, b.dict);
      m.pho_deg_en = en.pho_deg;
      m.pho_var_en = en.pho_var;
      m.sec_pho_en = std::move(en.per_section);
    } catch (const DataError&) {
    }
    try {
      PhoProfile kr = pho_profile(song, Lang::kr, b.dict);
      m.pho_deg_kr = kr.pho_deg;
      m.pho_var_kr = kr.pho_var;
      m.sec_pho_kr = std::move(kr.per_section);
    } catch (const DataError&) {
    }
  }

  if (o.which.scd) {
    const Lang src = song.original_language;
    const Lang dst = src == Lang::en ? Lang::kr : Lang::en;
    std::vector<std::pair<int, int>> counts;
    counts.reserve(static_cast<std::size_t>(m.lines));
    for (const auto& sec : song.sections) {
      for (const auto& lp : sec.lines) {
        counts.emplace_back(count_syllables_line(lp.text(src), b.dict, o.syllable).value,
                            count_syllables_line(lp.text(dst), b.dict, o.syllable).value);
      }
    }
    CountPairSeries series = CountPairSeries::from_counts(counts);
    m.scd_skipped = series.skipped;
    if (!series.pairs.empty()) {
      m.scd_value = scd(series);
      m.error_rate = error_rate(series);
      m.count_pairs = std::move(series.pairs);
    }
  }

  if (o.which.sem && b.embedding != nullptr && b.translation != nullptr) {
    try {
      SemReport line = sem_line(song, *b.embedding, *b.translation, false);
      m.sem_line = line.sem_line;
      m.line_sts = std::move(line.per_unit_sts);
    } catch (const DataError&) {
    }
    try {
      SemReport sec = sem_sec(song, *b.embedding, *b.translation, false);
      m.sem_sec = sec.sem_sec;
      m.sec_sts = std::move(sec.per_unit_sts);
      m.sec_weights.clear();
      for (const auto& s : song.sections) {
        m.sec_weights.push_back(static_cast<int>(s.lines.size()));
      }
    } catch (const DataError&) {
    }
  }

  if (o.which.nsp && b.coherence != nullptr) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& sec : song.sections) {
      for (std::size_t i = 0; i + 1 < sec.lines.size(); ++i) {
        pairs.emplace_back(sec.lines[i].en, sec.lines[i + 1].en);
      }
    }
    if (!pairs.empty()) {
      m.nsp_scores = b.coherence->score_pairs(pairs);
      double sum = 0.0;
      for (double v : m.nsp_scores) sum += v;
      m.nsp = sum / static_cast<double>(m.nsp_scores.size());
    }
  }
}

struct Accumulator {
  double sum = 0.0;
  long n = 0;
  void add(double v) {
    sum += v;
    ++n;
  }
  std::optional<double> mean() const {
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
  }
};

std::optional<double> pop_std(std::span<const double> values) {
  if (values.empty()) return std::nullopt;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return std::sqrt(sq / static_cast<double>(values.size()));
}

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::included ? "included" : "excluded"; }

std::optional<MetricSelection> MetricSelection::from_which(std::string_view which) {
  MetricSelection s{false, false, false, false};
  if (which == "all") return MetricSelection{true, true, true, true};
  if (which == "sem") {
    s.sem = true;
    return s;
  }
  if (which == "pho") {
    s.pho = true;
    return s;
  }
  if (which == "scd") {
    s.scd = true;
    return s;
  }
  if (which == "nsp") {
    s.nsp = true;
    return s;
  }
  return std::nullopt;
}

std::vector<SongMetrics> compute_song_metrics(const std::vector<AlignedSong>& corpus,
                                              const MetricBackends& backends,
                                              const ReportOptions& options) {
  std::vector<WorkItem> items;
  for (const auto& song : corpus) {
    if (options.official_only && song.translation_status != TranslationStatus::official) {
      continue;
    }
    WorkItem inc;
    inc.song = &song;
    inc.variant = Variant::included;
    items.push_back(std::move(inc));

    WorkItem exc;
    exc.song = &song;
    exc.variant = Variant::excluded;
    auto [filtered, removed] = filter_untranslated(song);
    exc.filtered = std::move(filtered);
    exc.excluded_lines = static_cast<int>(removed.size());
    items.push_back(std::move(exc));
  }

  std::vector<SongMetrics> rows(items.size());
  const bool uses_backends =
      (options.which.sem && backends.embedding != nullptr) ||
      (options.which.nsp && backends.coherence != nullptr);
  const int jobs = (uses_backends && !backends.thread_safe) ? 1 : options.jobs;
  par::for_each_index(items.size(), jobs, [&](std::size_t i) {
    compute_one(items[i], backends, options, rows[i]);
  });
  return rows;
}

MetricReport genre_report_from_songs(std::span<const SongMetrics> songs,
                                     const ReportOptions& options) {
  MetricReport report;
  static constexpr Genre kGenres[] = {Genre::kpop, Genre::animation, Genre::theatre, Genre::other};
  static constexpr Variant kVariants[] = {Variant::included, Variant::excluded};

  for (Genre genre : kGenres) {
    for (Variant variant : kVariants) {
      std::vector<const SongMetrics*> bucket;
      for (const auto& m : songs) {
        if (m.genre == genre && m.variant == variant) bucket.push_back(&m);
      }
      if (bucket.empty()) continue;

      ReportRow row;
      row.genre = genre;
      row.variant = variant;
      long scorable = 0;
      for (const auto* m : bucket) {
        row.lines += m->lines;
        if (m->lines > 0) ++scorable;
      }
      row.songs = static_cast<int>(bucket.size());
      if (scorable == 0) {
        report.warnings.push_back("genre bucket " + std::string(to_string(genre)) + "/" +
                                  std::string(to_string(variant)) +
                                  " has no scorable songs; omitted");
        continue;
      }

      if (!options.pooled) {
        Accumulator sem_line, sem_sec, pdeg_en, pvar_en, pdeg_kr, pvar_kr, scd_acc, er, nsp;
        for (const auto* m : bucket) {
          if (m->sem_line) sem_line.add(*m->sem_line);
          if (m->sem_sec) sem_sec.add(*m->sem_sec);
          if (m->pho_deg_en) pdeg_en.add(*m->pho_deg_en);
          if (m->pho_var_en) pvar_en.add(*m->pho_var_en);
          if (m->pho_deg_kr) pdeg_kr.add(*m->pho_deg_kr);
          if (m->pho_var_kr) pvar_kr.add(*m->pho_var_kr);
          if (m->scd_value) scd_acc.add(*m->scd_value);
          if (m->error_rate) er.add(*m->error_rate);
          if (m->nsp) nsp.add(*m->nsp);
        }
        row.sem_line = sem_line.mean();
        row.sem_sec = sem_sec.mean();
        row.pho_deg_en = pdeg_en.mean();
        row.pho_var_en = pvar_en.mean();
        row.pho_deg_kr = pdeg_kr.mean();
        row.pho_var_kr = pvar_kr.mean();
        row.scd = scd_acc.mean();
        row.error_rate = er.mean();
        row.nsp = nsp.mean();
      } else {
        Accumulator line_sts, nsp;
        double sec_weighted = 0.0;
        long sec_weight_total = 0;
        std::vector<double> pho_en, pho_kr;
        std::vector<std::pair<int, int>> pairs;
        for (const auto* m : bucket) {
          for (double v : m->line_sts) line_sts.add(v);
          for (std::size_t i = 0; i < m->sec_sts.size(); ++i) {
            sec_weighted += m->sec_sts[i] * m->sec_weights[i];
            sec_weight_total += m->sec_weights[i];
          }
          pho_en.insert(pho_en.end(), m->sec_pho_en.begin(), m->sec_pho_en.end());
          pho_kr.insert(pho_kr.end(), m->sec_pho_kr.begin(), m->sec_pho_kr.end());
          pairs.insert(pairs.end(), m->count_pairs.begin(), m->count_pairs.end());
          for (double v : m->nsp_scores) nsp.add(v);
        }
        row.sem_line = line_sts.mean();
        if (sec_weight_total > 0) {
          row.sem_sec = sec_weighted / static_cast<double>(sec_weight_total);
        }
        if (!pho_en.empty()) {
          Accumulator a;
          for (double v : pho_en) a.add(v);
          row.pho_deg_en = a.mean();
          row.pho_var_en = pop_std(pho_en);
        }
        if (!pho_kr.empty()) {
          Accumulator a;
          for (double v : pho_kr) a.add(v);
          row.pho_deg_kr = a.mean();
          row.pho_var_kr = pop_std(pho_kr);
        }
        if (!pairs.empty()) {
          CountPairSeries series;
          series.pairs = std::move(pairs);
          row.scd = scd(series);
          row.error_rate = error_rate(series);
        }
        row.nsp = nsp.mean();
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

MetricReport genre_report(const std::vector<AlignedSong>& corpus, const MetricBackends& backends,
                          const ReportOptions& options) {
  std::vector<SongMetrics> songs = compute_song_metrics(corpus, backends, options);
  return genre_report_from_songs(songs, options);
}

std::vector<DensityRow> density_data(const std::vector<AlignedSong>& corpus,
                                     const MetricBackends& backends,
                                     const ReportOptions& options) {
  ReportOptions o = options;
  o.which = MetricSelection{true, false, false, false};
  std::vector<SongMetrics> songs = compute_song_metrics(corpus, backends, o);
  std::vector<DensityRow> rows;
  for (const auto& m : songs) {
    for (double v : m.line_sts) rows.push_back({m.genre, m.variant, v});
  }
  return rows;
}

void write_metric_report_csv(const MetricReport& report, std::ostream& out) {
  out << "genre,variant,sem_line,sem_sec,pho_deg_en,pho_deg_kr,pho_var_en,pho_var_kr,scd,"
         "error_rate,nsp,songs,lines\n";
  for (const auto& r : report.rows) {
    out << to_string(r.genre) << ',' << to_string(r.variant) << ',' << fmt_opt(r.sem_line) << ','
        << fmt_opt(r.sem_sec) << ',' << fmt_opt(r.pho_deg_en) << ',' << fmt_opt(r.pho_deg_kr)
        << ',' << fmt_opt(r.pho_var_en) << ',' << fmt_opt(r.pho_var_kr) << ',' << fmt_opt(r.scd)
        << ',' << fmt_opt(r.error_rate) << ',' << fmt_opt(r.nsp) << ',' << r.songs << ','
        << r.lines << '\n';
  }
}

void write_metric_report_json(const MetricReport& report, std::ostream& out) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json j;
    j["genre"] = std::string(to_string(r.genre));
    j["variant"] = std::string(to_string(r.variant));
    const auto set = [&](const char* key, const std::optional<double>& v) {
      if (v) {
        j[key] = *v;
      } else {
        j[key] = nullptr;
      }
    };
    set("sem_line", r.sem_line);
    set("sem_sec", r.sem_sec);
    set("pho_deg_en", r.pho_deg_en);
    set("pho_deg_kr", r.pho_deg_kr);
    set("pho_var_en", r.pho_var_en);
    set("pho_var_kr", r.pho_var_kr);
    set("scd", r.scd);
    set("error_rate", r.error_rate);
    set("nsp", r.nsp);
    j["songs"] = r.songs;
    j["lines"] = r.lines;
    doc.push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

void write_song_metrics_csv(std::span<const SongMetrics> songs, std::ostream& out) {
  out << "song_id,genre,variant,sem_line,sem_sec,pho_deg_en,pho_deg_kr,pho_var_en,pho_var_kr,"
         "scd,error_rate,nsp,lines,sections,excluded_lines,scd_skipped\n";
  for (const auto& m : songs) {
    out << m.song_id << ',' << to_string(m.genre) << ',' << to_string(m.variant) << ','
        << fmt_opt(m.sem_line) << ',' << fmt_opt(m.sem_sec) << ',' << fmt_opt(m.pho_deg_en) << ','
        << fmt_opt(m.pho_deg_kr) << ',' << fmt_opt(m.pho_var_en) << ',' << fmt_opt(m.pho_var_kr)
        << ',' << fmt_opt(m.scd_value) << ',' << fmt_opt(m.error_rate) << ',' << fmt_opt(m.nsp)
        << ',' << m.lines << ',' << m.sections << ',' << m.excluded_lines << ',' << m.scd_skipped
        << '\n';
  }
}

void write_density_csv(std::span<const DensityRow> rows, std::ostream& out) {
  out << "genre,variant,sts\n";
  for (const auto& r : rows) {
    out << to_string(r.genre) << ',' << to_string(r.variant) << ',' << fmt(r.sts) << '\n';
  }
}

}  // namespace kelp
