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

#include "termrank/bench.h"

#include <chrono>
#include <cmath>
#include <iomanip>

#include "termrank/pipeline.h"

namespace termrank {

std::vector<Document> duplicate_corpus(std::span<const Document> docs,
                                       std::size_t k) {
  std::vector<Document> out;
  out.reserve(docs.size() * k);
  for (std::size_t copy = 1; copy <= k; ++copy) {
    const std::string suffix = "#copy_" + std::to_string(copy);
    for (const auto& d : docs) out.push_back({d.doc_id + suffix, d.text});
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BenchRow summarize(std::size_t scale, const char* phase,
                   const std::vector<double>& samples) {
  BenchRow row{scale, phase, 0.0, 0.0, samples.size()};
  for (double s : samples) row.mean_seconds += s;
  row.mean_seconds /= static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - row.mean_seconds) * (s - row.mean_seconds);
    row.stddev_seconds = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  }
  return row;
}

}  // namespace

BenchReport run_benchmark(std::span<const Document> base,
                          const Annotator& annotator,
                          const StopwordList& stopwords,
                          std::span<const LinguisticFilter> filters,
                          const BenchConfig& config) {
  if (config.repeats == 0) throw ConfigError("repeats must be >= 1");
  for (auto k : config.scales) {
    if (k < 1) throw ConfigError("benchmark scales must be >= 1");
  }

  BenchReport report;
  for (auto scale : config.scales) {
    const auto docs = duplicate_corpus(base, scale);
    std::vector<double> pre, cv, ncv, lidf;
    for (std::size_t run = 0; run < config.repeats; ++run) {
      auto t0 = Clock::now();
      auto annotated = annotate_corpus(docs, annotator, stopwords, config.shards);
      StatsOptions stats_options{config.window, config.shards};
      CorpusStats stats = compute_corpus_stats(annotated, filters, stats_options);
      pre.push_back(seconds_since(t0));

      if (run == 0) {
        auto& terms = report.candidates[scale];
        for (const auto& [key, ts] : stats.terms) terms.push_back(key.str());
      }

      std::vector<TermScore> scores;
      t0 = Clock::now();
      auto c = compute_c_values(stats, config.shards);
      for (const auto& [key, ts] : stats.terms) scores.push_back({key, 0.0});
      for (std::size_t i = 0; i < c.size(); ++i) scores[i].value = c[i];
      normalize_and_rank(scores);
      cv.push_back(seconds_since(t0));

      if (!stats.terms.empty()) {
        t0 = Clock::now();
        auto nc = compute_nc_values(stats, c, config.top_fraction, config.nc,
                                    config.shards);
        for (std::size_t i = 0; i < nc.size(); ++i) scores[i].value = nc[i];
        normalize_and_rank(scores);
        ncv.push_back(seconds_since(t0));

        t0 = Clock::now();
        auto l = compute_lidf_values(stats, c, config.shards);
        for (std::size_t i = 0; i < l.size(); ++i) scores[i].value = l[i];
        normalize_and_rank(scores);
        lidf.push_back(seconds_since(t0));
      } else {
        ncv.push_back(0.0);
        lidf.push_back(0.0);
      }
    }
    report.rows.push_back(summarize(scale, "preprocessing", pre));
    report.rows.push_back(summarize(scale, "cvalue", cv));
    report.rows.push_back(summarize(scale, "ncvalue", ncv));
    report.rows.push_back(summarize(scale, "lidf", lidf));
  }
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "scale,phase,mean_seconds,stddev_seconds,n_runs\n";
  auto flags = out.flags();
  out << std::setprecision(9);
  for (const auto& row : report.rows) {
    out << row.scale << ',' << row.phase << ',' << row.mean_seconds << ','
        << row.stddev_seconds << ',' << row.n_runs << '\n';
  }
  out.flags(flags);
}

}  // namespace termrank
