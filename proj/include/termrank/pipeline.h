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

// End-to-end stages composed from the modules: annotate a raw corpus,
// extract statistics into a store, score a store.

#ifndef TERMRANK_PIPELINE_H_
#define TERMRANK_PIPELINE_H_

#include <filesystem>
#include <span>
#include <vector>

#include "termrank/corpus_stats.h"
#include "termrank/engine.h"
#include "termrank/preprocess.h"
#include "termrank/scoring.h"
#include "termrank/term_store.h"

namespace termrank {

std::vector<AnnotatedDocument> annotate_corpus(
    std::span<const Document> docs, const Annotator& annotator,
    const StopwordList& stopwords, const ShardOptions& shards = {},
    AnnotateDiagnostics* diagnostics = nullptr);

// Computes statistics and writes the store and its snapshot. Nothing is
// written if statistics fail. Returns the statistics.
CorpusStats extract_to_store(std::span<const AnnotatedDocument> docs,
                             std::span<const LinguisticFilter> filters,
                             const StatsOptions& options,
                             const std::filesystem::path& store);

// Computes the requested metrics (C-Value, NC-Value, LIDF-Value, in that
// order) and updates the store. All scores are computed before the first
// write.
void score_store(const std::filesystem::path& store,
                 const ScoringOptions& options);

}  // namespace termrank

#endif  // TERMRANK_PIPELINE_H_
