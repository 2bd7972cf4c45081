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

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kelp/config.hpp"
#include "kelp/corpus.hpp"
#include "kelp/error.hpp"
#include "kelp/preprocess.hpp"
#include "kelp/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataViolation = 1;
constexpr int kExitUsage = 2;

// Writes to the path or stdout; binary so outputs are byte-stable.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw kelp::Error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct Cli {
  kelp::Config config;
  std::string which = "all";
  std::string out_path;
  std::string input_path;  // TSV for the general_* schemes
  std::string scheme = "lyrics_line";
  std::string format = "csv";
  bool no_syl = false;
  bool no_shuffle = false;
  bool exclude_parentheticals = false;
};

std::vector<kelp::AlignedSong> load_corpus_or_die(const kelp::Config& config) {
  if (config.corpus_path.empty()) {
    throw kelp::ConfigError("no corpus file given (use --corpus)");
  }
  return kelp::load_corpus(config.corpus_path);
}

kelp::ReportOptions report_options(const Cli& cli, const kelp::PronouncingDict* /*dict*/) {
  kelp::ReportOptions o;
  auto which = kelp::MetricSelection::from_which(cli.which);
  if (!which) {
    throw kelp::ConfigError("--which must be one of sem|pho|scd|nsp|all, got \"" + cli.which +
                            "\"");
  }
  o.which = *which;
  o.official_only = cli.config.official_only;
  o.pooled = cli.config.pooled;
  o.syllable.include_parentheticals = cli.config.include_parentheticals;
  o.jobs = cli.config.jobs;
  return o;
}

int cmd_validate(const Cli& cli) {
  if (cli.config.corpus_path.empty()) {
    throw kelp::ConfigError("no corpus file given (use --corpus)");
  }
  kelp::ParseOptions opts;
  opts.validate = false;
  auto corpus = kelp::load_corpus(cli.config.corpus_path, opts);
  long total = 0;
  for (const auto& song : corpus) {
    for (const auto& v : kelp::validate_alignment(song)) {
      std::cout << song.song_id << ": " << kelp::format_violation(v) << '\n';
      ++total;
    }
  }
  if (total > 0) {
    std::cerr << total << " violation(s) in " << corpus.size() << " song(s)\n";
    return kExitDataViolation;
  }
  return kExitOk;
}

int cmd_stats(const Cli& cli) {
  auto corpus = load_corpus_or_die(cli.config);
  kelp::CorpusStats st = kelp::corpus_stats(corpus);
  nlohmann::ordered_json j;
  j["songs"] = st.songs;
  j["total_sections"] = st.total_sections;
  j["unique_sections_kr"] = st.unique_sections_kr;
  j["unique_sections_en"] = st.unique_sections_en;
  j["total_lines"] = st.total_lines;
  j["unique_lines_kr"] = st.unique_lines_kr;
  j["unique_lines_en"] = st.unique_lines_en;
  j["vocab_en"] = st.vocab_en;
  OutputSink sink(cli.out_path);
  sink.stream() << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_metrics(const Cli& cli) {
  auto corpus = load_corpus_or_die(cli.config);
  auto dict = kelp::load_configured_dict(cli.config);
  kelp::BackendSet backends = kelp::make_backends(cli.config);
  kelp::MetricBackends mb;
  mb.embedding = backends.embedding.get();
  mb.translation = backends.translation.get();
  mb.coherence = backends.coherence.get();
  mb.dict = dict ? &*dict : nullptr;
  mb.thread_safe = backends.thread_safe;
  auto rows = kelp::compute_song_metrics(corpus, mb, report_options(cli, mb.dict));
  OutputSink sink(cli.out_path);
  kelp::write_song_metrics_csv(rows, sink.stream());
  return kExitOk;
}

int cmd_report(const Cli& cli) {
  auto corpus = load_corpus_or_die(cli.config);
  auto dict = kelp::load_configured_dict(cli.config);
  kelp::BackendSet backends = kelp::make_backends(cli.config);
  kelp::MetricBackends mb;
  mb.embedding = backends.embedding.get();
  mb.translation = backends.translation.get();
  mb.coherence = backends.coherence.get();
  mb.dict = dict ? &*dict : nullptr;
  mb.thread_safe = backends.thread_safe;
  kelp::MetricReport report = kelp::genre_report(corpus, mb, report_options(cli, mb.dict));
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  OutputSink sink(cli.out_path);
  if (cli.format == "json") {
    kelp::write_metric_report_json(report, sink.stream());
  } else if (cli.format == "csv") {
    kelp::write_metric_report_csv(report, sink.stream());
  } else {
    throw kelp::ConfigError("--format must be csv or json, got \"" + cli.format + "\"");
  }
  return kExitOk;
}

int cmd_density(const Cli& cli) {
  auto corpus = load_corpus_or_die(cli.config);
  auto dict = kelp::load_configured_dict(cli.config);
  kelp::BackendSet backends = kelp::make_backends(cli.config);
  kelp::MetricBackends mb;
  mb.embedding = backends.embedding.get();
  mb.translation = backends.translation.get();
  mb.dict = dict ? &*dict : nullptr;
  mb.thread_safe = backends.thread_safe;
  auto rows = kelp::density_data(corpus, mb, report_options(cli, mb.dict));
  OutputSink sink(cli.out_path);
  kelp::write_density_csv(rows, sink.stream());
  return kExitOk;
}

int cmd_preprocess(const Cli& cli) {
  auto scheme = kelp::scheme_from_string(cli.scheme);
  if (!scheme) {
    throw kelp::ConfigError(
        "--scheme must be general_line|general_section|lyrics_line|lyrics_section, got \"" +
        cli.scheme + "\"");
  }
  kelp::PreprocessOptions options;
  options.scheme = *scheme;
  options.syl_mode = cli.no_syl ? kelp::SylMode::without_syl : kelp::SylMode::with_syl;
  options.seed = cli.config.seed;
  options.shuffle_sections = !cli.no_shuffle;
  options.syllable.include_parentheticals = cli.config.include_parentheticals;
  auto dict = kelp::load_configured_dict(cli.config);
  const kelp::PronouncingDict* dict_ptr = dict ? &*dict : nullptr;

  OutputSink sink(cli.out_path);
  kelp::EmitStats stats;
  if (*scheme == kelp::Scheme::general_line || *scheme == kelp::Scheme::general_section) {
    if (cli.input_path.empty()) {
      throw kelp::ConfigError("general_* schemes read sentence pairs; use --input pairs.tsv");
    }
    auto pairs = kelp::load_sentence_pairs_tsv_file(cli.input_path);
    stats = kelp::emit_training_file(pairs, options, dict_ptr, sink.stream());
  } else {
    auto corpus = load_corpus_or_die(cli.config);
    stats = kelp::emit_training_file(corpus, options, dict_ptr, sink.stream());
  }
  std::cerr << stats.records << " record(s), " << stats.dropped_lines << " line(s) dropped, "
            << stats.dropped_sections << " section(s) dropped\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kelp: aligned Korean-English lyric corpora - validation, singability metrics, "
               "training-data preprocessing"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML-style key/value config file");

  Cli cli;
  app.add_option("--corpus", cli.config.corpus_path, "corpus JSON or JSONL file");
  app.add_option("--dict", cli.config.dictionary_path,
                 "pronouncing dictionary (CMUdict format); defaults to $LYR_DICT");
  app.add_option("--jobs", cli.config.jobs, "worker threads for per-song fan-out (0 = auto)");
  app.add_option("--seed", cli.config.seed, "seed for shuffling and segmentation");
  app.add_flag("--exclude-parentheticals", cli.exclude_parentheticals,
               "strip parenthesized ad-libs before counting syllables");
  app.add_flag("--pooled", cli.config.pooled,
               "pool lines/sections across songs instead of per-song averaging");
  app.add_flag("--official-only", cli.config.official_only,
               "restrict reports to official translations");

  app.add_option("--embed-kind", cli.config.embedding.kind, "stub | remote");
  app.add_option("--embed-endpoint", cli.config.embedding.endpoint, "embedding service URL");
  app.add_option("--embed-key-env", cli.config.embedding.api_key_env,
                 "env var holding the embedding API key");
  app.add_option("--translate-kind", cli.config.translation.kind, "stub | remote");
  app.add_option("--translate-endpoint", cli.config.translation.endpoint,
                 "translation service URL");
  app.add_option("--translate-key-env", cli.config.translation.api_key_env,
                 "env var holding the translation API key");
  app.add_option("--nsp-kind", cli.config.nsp.kind, "stub | remote");
  app.add_option("--nsp-endpoint", cli.config.nsp.endpoint, "coherence service URL");
  app.add_option("--nsp-key-env", cli.config.nsp.api_key_env,
                 "env var holding the coherence API key");

  CLI::App* validate = app.add_subcommand("validate", "check alignment invariants");
  CLI::App* stats = app.add_subcommand("stats", "print corpus statistics as JSON");
  CLI::App* metrics = app.add_subcommand("metrics", "per-song metric rows as CSV");
  CLI::App* preprocess = app.add_subcommand("preprocess", "emit training JSONL");
  CLI::App* report = app.add_subcommand("report", "per-genre metric aggregation");
  CLI::App* density = app.add_subcommand("density", "per-line sts rows for density plots");

  metrics->add_option("--which", cli.which, "sem|pho|scd|nsp|all");
  metrics->add_option("--out", cli.out_path, "output file (default stdout)");
  stats->add_option("--out", cli.out_path, "output file (default stdout)");
  report->add_option("--format", cli.format, "csv | json");
  report->add_option("--out", cli.out_path, "output file (default stdout)");
  density->add_option("--out", cli.out_path, "output file (default stdout)");
  preprocess->add_option("--scheme", cli.scheme,
                         "general_line|general_section|lyrics_line|lyrics_section");
  preprocess->add_flag("--no-syl", cli.no_syl, "omit syllable tokens (<SEP> for sections)");
  preprocess->add_flag("--no-shuffle", cli.no_shuffle, "keep section line order");
  preprocess->add_option("--input", cli.input_path, "sentence-pair TSV for general_* schemes");
  preprocess->add_option("--out", cli.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  cli.config.include_parentheticals = !cli.exclude_parentheticals;

  try {
    kelp::validate_config(cli.config);
    if (validate->parsed()) return cmd_validate(cli);
    if (stats->parsed()) return cmd_stats(cli);
    if (metrics->parsed()) return cmd_metrics(cli);
    if (preprocess->parsed()) return cmd_preprocess(cli);
    if (report->parsed()) return cmd_report(cli);
    if (density->parsed()) return cmd_density(cli);
    std::cerr << "no command given\n";
    return kExitUsage;
  } catch (const kelp::AlignmentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDataViolation;
  } catch (const kelp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
