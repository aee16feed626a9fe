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

// Brute-force single-threaded reference for the statistics and scores.
// Shares nothing with the library beyond the input document types: filters
// are std::regex over tag letters, counts are nested loops, containment is a
// pairwise scan.

#ifndef TERMRANK_TESTS_ORACLE_REFERENCE_H_
#define TERMRANK_TESTS_ORACLE_REFERENCE_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "termrank/types.h"

namespace termrank::oracle {

// Letters: N A R V O.
char tag_letter(PosTag tag);
std::string tag_letters(const std::vector<PosTag>& tags);

// (id, regex over tag letters) for the five built-in filters.
const std::vector<std::pair<int, std::string>>& builtin_filter_regexes();

// Lowest id whose regex matches `letters` in full, 0 if none. Memoized.
int matching_filter(const std::string& letters,
                    const std::vector<std::pair<int, std::string>>& filters);

struct RefSpan {
  std::size_t start;
  std::size_t length;
  int filter_id;
  bool operator==(const RefSpan&) const = default;
};

std::vector<RefSpan> reference_spans(
    const std::vector<PosTag>& tags,
    const std::vector<std::pair<int, std::string>>& filters);

struct RefTerm {
  std::vector<std::string> words;
  std::int64_t freq = 0;
  std::int64_t doc_freq = 0;
  int filter = 0;
  std::vector<std::string> containers;
  double idf = 0.0;
  double c_value = 0.0;
  double nc_constituent = 0.0;
  double nc_window = 0.0;
  double lidf = 0.0;
};

struct RefResult {
  std::int64_t n_docs = 0;
  std::map<int, std::int64_t> filter_counts;
  std::map<std::string, double> filter_probability;
  std::map<std::string, RefTerm> terms;
};

struct RefOptions {
  int window = 5;
  double top_fraction = 1.0;
  // IDF logarithm base; 0 means natural log.
  double idf_base = 0.0;
};

RefResult reference_pipeline(
    const std::vector<AnnotatedDocument>& docs,
    const std::vector<std::pair<int, std::string>>& filters,
    const RefOptions& options = {});

// Random annotated corpus over a small vocabulary, dense in nested runs.
std::vector<AnnotatedDocument> random_corpus(std::mt19937_64& rng,
                                             std::size_t max_docs,
                                             std::size_t max_sentence_len);

bool relative_close(double a, double b, double rel);

}  // namespace termrank::oracle

#endif  // TERMRANK_TESTS_ORACLE_REFERENCE_H_
