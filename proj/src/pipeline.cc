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

#include "termrank/pipeline.h"

#include <map>
#include <string>

namespace termrank {

std::vector<AnnotatedDocument> annotate_corpus(
    std::span<const Document> docs, const Annotator& annotator,
    const StopwordList& stopwords, const ShardOptions& shards,
    AnnotateDiagnostics* diagnostics) {
  std::vector<AnnotateDiagnostics> per_doc(docs.size());
  auto out = parallel_map<AnnotatedDocument>(docs.size(), shards, [&](std::size_t i) {
    return annotate(docs[i], annotator, stopwords, &per_doc[i]);
  });
  if (diagnostics) {
    for (const auto& d : per_doc) diagnostics->dropped_sentences += d.dropped_sentences;
  }
  return out;
}

CorpusStats extract_to_store(std::span<const AnnotatedDocument> docs,
                             std::span<const LinguisticFilter> filters,
                             const StatsOptions& options,
                             const std::filesystem::path& store) {
  CorpusStats stats = compute_corpus_stats(docs, filters, options);
  RunMeta meta;
  meta.n_docs = stats.n_docs;
  meta.window = stats.window;
  write_snapshot(stats, snapshot_path(store));
  write_records(records_from_stats(stats, meta), store);
  return stats;
}

void score_store(const std::filesystem::path& store,
                 const ScoringOptions& options) {
  CorpusStats stats = load_corpus_stats(store);
  auto scored = score_corpus(stats, options);

  std::map<std::string, ScoreValue> c, nc, lidf;
  for (const auto& s : scored) {
    if (s.c_value.raw) c[s.key.str()] = {*s.c_value.raw, *s.c_value.normalized};
    if (s.nc_value.raw) nc[s.key.str()] = {*s.nc_value.raw, *s.nc_value.normalized};
    if (s.lidf_value.raw) {
      lidf[s.key.str()] = {*s.lidf_value.raw, *s.lidf_value.normalized};
    }
  }
  update_scores(store, Metric::kCValue, c);
  update_scores(store, Metric::kNcValue, nc);
  update_scores(store, Metric::kLidf, lidf);

  RunMeta meta;
  meta.n_docs = stats.n_docs;
  meta.context_mode = std::string(context_mode_name(options.nc.mode));
  meta.window = options.nc.window;
  meta.top_fraction = options.top_fraction;
  update_meta(store, meta);
}

}  // namespace termrank
