// Copyright 2026 The termrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "termrank/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "termrank/bench.h"
#include "termrank/corpus.h"
#include "termrank/pipeline.h"
#include "termrank/term_store.h"

namespace termrank {

namespace fs = std::filesystem;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

const std::string kDataDir = TERMRANK_DATA_DIR;

struct GlobalOptions {
  std::size_t shards = 0;
  int workers = 0;
  std::string store = "terms.jsonl";

  ShardOptions shard_options() const { return {shards, workers}; }
};

struct CorpusOptions {
  std::string input;
  std::string format = "plain-text-dir";
  std::string stopwords = kDataDir + "/stopwords.txt";
  std::string lexicon = kDataDir + "/lexicon.tsv";
  std::string filters;
};

void require_file(const std::string& flag, const std::string& path) {
  std::error_code ec;
  if (path.empty() || !fs::is_regular_file(path, ec)) {
    throw ConfigError(flag + ": file '" + path + "' does not exist");
  }
}

bool is_annotated_format(const std::string& format) {
  return format == "annotated" || format == "conllu";
}

StopwordList load_stopwords(const CorpusOptions& opts) {
  require_file("--stopwords", opts.stopwords);
  return StopwordList::from_file(opts.stopwords);
}

std::vector<LinguisticFilter> load_filters(const CorpusOptions& opts) {
  auto filters = builtin_filters();
  if (!opts.filters.empty()) {
    require_file("--filters", opts.filters);
    try {
      for (auto& f : load_filter_file(opts.filters)) filters.push_back(std::move(f));
    } catch (const ParseError& e) {
      throw ConfigError(std::string("--filters: ") + e.what());
    }
  }
  return filters;
}

std::vector<Document> load_raw(const CorpusOptions& opts, std::ostream& err) {
  if (opts.input.empty()) throw ConfigError("--input is required");
  RawCorpus corpus = ingest_raw(opts.input, parse_raw_format(opts.format));
  for (const auto& e : corpus.errors) {
    err << "warning: skipped document '" << e.doc_id << "': " << e.message << '\n';
  }
  return std::move(corpus.documents);
}

std::vector<AnnotatedDocument> load_corpus(const CorpusOptions& opts,
                                           const StopwordList& stopwords,
                                           const ShardOptions& shards,
                                           std::ostream& err) {
  if (opts.input.empty()) throw ConfigError("--input is required");
  if (is_annotated_format(opts.format)) {
    AnnotatedCorpus corpus = ingest_annotated(opts.input, stopwords);
    if (corpus.unknown_tags > 0) {
      err << "warning: " << corpus.unknown_tags
          << " token(s) with unknown tags mapped to OTHER\n";
    }
    return std::move(corpus.documents);
  }
  require_file("--lexicon", opts.lexicon);
  auto annotator = builtin_annotator(opts.lexicon);
  auto docs = load_raw(opts, err);
  AnnotateDiagnostics diagnostics;
  auto annotated = annotate_corpus(docs, *annotator, stopwords, shards, &diagnostics);
  if (diagnostics.dropped_sentences > 0) {
    err << "warning: " << diagnostics.dropped_sentences
        << " sentence(s) dropped by the annotator\n";
  }
  return annotated;
}

void add_corpus_options(CLI::App* cmd, CorpusOptions& opts, bool with_filters) {
  cmd->add_option("--input", opts.input, "Input corpus path")->required();
  cmd->add_option("--format", opts.format,
                  "plain-text-dir, one-doc-per-line or annotated (alias conllu)")
      ->capture_default_str();
  cmd->add_option("--stopwords", opts.stopwords, "Stopword file")
      ->capture_default_str();
  cmd->add_option("--lexicon", opts.lexicon, "Lexicon file (surface lemma upos)")
      ->capture_default_str();
  if (with_filters) {
    cmd->add_option("--filters", opts.filters,
                    "Extra filter patterns, one per line (ids 6, 7, ...)");
  }
}

int cmd_preprocess(const GlobalOptions& global, const CorpusOptions& opts,
                   const std::string& output, std::ostream& out,
                   std::ostream& err) {
  auto stopwords = load_stopwords(opts);
  auto docs = load_corpus(opts, stopwords, global.shard_options(), err);
  write_annotated_file(output, docs);
  std::size_t sentences = 0, tokens = 0;
  for (const auto& d : docs) {
    sentences += d.sentences.size();
    for (const auto& s : d.sentences) tokens += s.size();
  }
  out << docs.size() << " documents, " << sentences << " sentences, " << tokens
      << " tokens\n";
  return 0;
}

int cmd_extract(const GlobalOptions& global, const CorpusOptions& opts,
                int window, std::ostream& out, std::ostream& err) {
  if (window < 0) throw ConfigError("--window must be >= 0");
  auto stopwords = load_stopwords(opts);
  auto filters = load_filters(opts);
  auto docs = load_corpus(opts, stopwords, global.shard_options(), err);
  StatsOptions stats_options{window, global.shard_options()};
  CorpusStats stats = extract_to_store(docs, filters, stats_options, global.store);
  out << stats.terms.size() << " candidate terms\n";
  if (stats.terms.empty()) err << "warning: no candidate terms found\n";
  return 0;
}

int cmd_score(const GlobalOptions& global, std::vector<std::string> metrics,
              const std::string& mode, int window, double top_fraction,
              std::ostream& out, std::ostream& err) {
  if (window < 0) throw ConfigError("--window must be >= 0");
  ScoringOptions options;
  options.c_value = options.nc_value = options.lidf_value = false;
  for (const auto& m : metrics) {
    switch (parse_metric(m)) {
      case Metric::kCValue: options.c_value = true; break;
      case Metric::kNcValue: options.nc_value = true; break;
      case Metric::kLidf: options.lidf_value = true; break;
    }
  }
  if (!options.c_value && (options.nc_value || options.lidf_value)) {
    err << "note: cvalue enabled (required by ncvalue and lidf)\n";
    options.c_value = true;
  }
  options.nc.mode = parse_context_mode(mode);
  options.nc.window = window;
  options.top_fraction = top_fraction;
  if (!(top_fraction > 0.0 && top_fraction <= 1.0)) {
    throw ConfigError("--top-fraction must be in (0, 1]");
  }
  options.shards = global.shard_options();
  score_store(global.store, options);
  out << "scored " << global.store << '\n';
  return 0;
}

// Column width in code points, so non-ASCII terms line up.
std::size_t display_width(const std::string& text) {
  std::size_t n = 0;
  for (unsigned char c : text) n += (c & 0xC0) != 0x80;
  return n;
}

void print_table(std::ostream& out, const std::vector<TermRecord>& rows,
                 const std::vector<TermRecord>& all, Metric metric) {
  std::size_t term_width = 4;
  for (const auto& r : rows) term_width = std::max(term_width, display_width(r.term));
  auto flags = out.flags();
  out << std::left << std::setw(6) << "rank" << std::setw(term_width + 2) << "term"
      << std::setw(10) << metric_name(metric) << std::setw(11) << "frequency"
      << "nested" << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::ostringstream score;
    score << std::fixed << std::setprecision(2) << r.normalized(metric).value_or(0.0);
    out << std::left << std::setw(6) << (i + 1) << r.term
        << std::string(term_width + 2 - display_width(r.term), ' ')
        << std::setw(10) << score.str() << std::setw(11) << r.freq
        << (is_nested(r, all) ? "Yes" : "No") << '\n';
  }
  out.flags(flags);
}

int cmd_top(const GlobalOptions& global, const std::string& metric_flag,
            std::size_t k, bool json, std::ostream& out) {
  Metric metric = parse_metric(metric_flag);
  auto all = read_records(global.store);
  auto rows = top_k(all, metric, k);
  if (json) {
    for (const auto& r : rows) out << to_json_line(r) << '\n';
  } else {
    print_table(out, rows, all, metric);
  }
  return 0;
}

int cmd_search(const GlobalOptions& global, const std::string& query,
               const std::string& mode, bool json, std::ostream& out) {
  auto rows = termrank::search(global.store, query, parse_search_mode(mode));
  if (json) {
    for (const auto& r : rows) out << to_json_line(r) << '\n';
    return 0;
  }
  auto all = read_records(global.store);
  Metric metric = Metric::kCValue;
  for (Metric m : {Metric::kLidf, Metric::kNcValue, Metric::kCValue}) {
    if (!rows.empty() && rows.front().normalized(m)) metric = m;
  }
  print_table(out, rows, all, metric);
  return 0;
}

int cmd_bench(const GlobalOptions& global, const CorpusOptions& opts,
              const BenchConfig& base_config, const std::string& output,
              std::ostream& out, std::ostream& err) {
  if (is_annotated_format(opts.format)) {
    throw ConfigError("--format: bench needs raw input (plain-text-dir or one-doc-per-line)");
  }
  auto stopwords = load_stopwords(opts);
  auto filters = load_filters(opts);
  require_file("--lexicon", opts.lexicon);
  auto annotator = builtin_annotator(opts.lexicon);
  auto docs = load_raw(opts, err);
  BenchConfig config = base_config;
  config.shards = global.shard_options();
  BenchReport report = run_benchmark(docs, *annotator, stopwords, filters, config);
  if (output.empty() || output == "-") {
    write_bench_csv(out, report);
  } else {
    std::ofstream file(output);
    if (!file) throw IoError("cannot write '" + output + "'");
    write_bench_csv(file, report);
    out << "wrote " << output << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Multi-word term extraction and ranking"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--shards", global.shards, "Shard count (default: workers)");
  app.add_option("--workers", global.workers, "Worker threads (default: all cores)");
  app.add_option("--store", global.store, "Term store path")->capture_default_str();

  CorpusOptions pre_opts;
  std::string pre_output = "annotated.tsv";
  auto* pre = app.add_subcommand("preprocess", "Annotate a raw corpus");
  add_corpus_options(pre, pre_opts, false);
  pre->add_option("--output", pre_output, "Annotated corpus output")
      ->capture_default_str();

  CorpusOptions ext_opts;
  ext_opts.format = "annotated";
  int ext_window = 5;
  auto* ext = app.add_subcommand("extract", "Extract candidate terms and statistics");
  add_corpus_options(ext, ext_opts, true);
  ext->add_option("--window", ext_window, "Context window collected for NC-Value")
      ->capture_default_str();

  std::vector<std::string> metrics{"cvalue", "ncvalue", "lidf"};
  std::string context_mode = "constituent";
  int score_window = 5;
  double top_fraction = 1.0;
  auto* score = app.add_subcommand("score", "Compute C-Value, NC-Value, LIDF-Value");
  score->add_option("--metrics", metrics, "cvalue,ncvalue,lidf")
      ->delimiter(',')
      ->capture_default_str();
  score->add_option("--context-mode", context_mode, "constituent or window")
      ->capture_default_str();
  score->add_option("--window", score_window, "Window for window mode")
      ->capture_default_str();
  score->add_option("--top-fraction", top_fraction,
                    "Fraction of C-Value terms giving context words")
      ->capture_default_str();

  std::string top_metric = "cvalue";
  std::size_t top_k_count = 10;
  bool top_json = false;
  auto* top = app.add_subcommand("top", "Show the top-k terms by a metric");
  top->add_option("--metric", top_metric, "cvalue, ncvalue or lidf")
      ->capture_default_str();
  top->add_option("-k", top_k_count, "Number of rows")->capture_default_str();
  top->add_flag("--json", top_json, "Print raw records");

  std::string query;
  std::string search_mode = "exact";
  bool search_json = false;
  auto* find = app.add_subcommand("search", "Look up terms");
  find->add_option("query", query, "Term or substring")->required();
  find->add_option("--mode", search_mode, "exact or substring")->capture_default_str();
  find->add_flag("--json", search_json, "Print raw records");

  CorpusOptions bench_opts;
  BenchConfig bench_config;
  std::string bench_output;
  std::string bench_mode = "constituent";
  std::vector<long long> scales{1, 2, 3, 4, 5};
  long long repeats = 10;
  auto* bench = app.add_subcommand("bench", "Scalability benchmark over duplicated corpora");
  add_corpus_options(bench, bench_opts, true);
  bench->add_option("--scales", scales, "Duplication factors")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--repeats", repeats, "Runs per scale")->capture_default_str();
  bench->add_option("--output", bench_output, "CSV report path (default: stdout)");
  bench->add_option("--window", bench_config.window, "Context window")
      ->capture_default_str();
  bench->add_option("--context-mode", bench_mode, "constituent or window")
      ->capture_default_str();
  bench->add_option("--top-fraction", bench_config.top_fraction, "Context fraction")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (global.workers < 0) throw ConfigError("--workers must be >= 0");
    if (pre->parsed()) return cmd_preprocess(global, pre_opts, pre_output, out, err);
    if (ext->parsed()) return cmd_extract(global, ext_opts, ext_window, out, err);
    if (score->parsed()) {
      return cmd_score(global, metrics, context_mode, score_window, top_fraction,
                       out, err);
    }
    if (top->parsed()) return cmd_top(global, top_metric, top_k_count, top_json, out);
    if (find->parsed()) return cmd_search(global, query, search_mode, search_json, out);
    if (bench->parsed()) {
      bench_config.scales.clear();
      for (auto s : scales) {
        if (s < 1) throw ConfigError("--scales: every scale must be >= 1");
        bench_config.scales.push_back(static_cast<std::size_t>(s));
      }
      if (repeats < 1) throw ConfigError("--repeats must be >= 1");
      bench_config.repeats = static_cast<std::size_t>(repeats);
      bench_config.nc.mode = parse_context_mode(bench_mode);
      bench_config.nc.window = bench_config.window;
      return cmd_bench(global, bench_opts, bench_config, bench_output, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace termrank
