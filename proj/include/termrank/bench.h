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

// Scalability harness: runs the pipeline phases over k-fold duplicated
// copies of a base corpus and reports per-phase timings.

#ifndef TERMRANK_BENCH_H_
#define TERMRANK_BENCH_H_

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "termrank/filters.h"
#include "termrank/preprocess.h"
#include "termrank/scoring.h"

namespace termrank {

// k copies of `docs`, copy i (1-based) with doc ids suffixed "#copy_i".
std::vector<Document> duplicate_corpus(std::span<const Document> docs,
                                       std::size_t k);

struct BenchConfig {
  std::vector<std::size_t> scales{1, 2, 3, 4, 5};
  std::size_t repeats = 10;
  int window = 5;
  double top_fraction = 1.0;
  NcOptions nc;
  ShardOptions shards;
};

struct BenchRow {
  std::size_t scale = 0;
  std::string phase;  // preprocessing, cvalue, ncvalue, lidf
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;  // sample standard deviation
  std::size_t n_runs = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // scale -> sorted candidate terms
  std::map<std::size_t, std::vector<std::string>> candidates;
};

// Preprocessing covers annotation plus both statistics passes. Throws
// ConfigError for a scale < 1 or zero repeats.
BenchReport run_benchmark(std::span<const Document> base,
                          const Annotator& annotator,
                          const StopwordList& stopwords,
                          std::span<const LinguisticFilter> filters,
                          const BenchConfig& config);

// Header: scale,phase,mean_seconds,stddev_seconds,n_runs
void write_bench_csv(std::ostream& out, const BenchReport& report);

}  // namespace termrank

#endif  // TERMRANK_BENCH_H_
