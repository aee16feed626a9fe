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

// C-Value, NC-Value and LIDF-Value over a CorpusStats snapshot.
//
//   C(a)    = log2(1 + |a|) * f(a)                                T_a empty
//           = log2(1 + |a|) * (f(a) - sum_{b in T_a} f(b) / |T_a|) otherwise
//   w(c)    = t(c) / n_C
//   NC(a)   = 0.8 * C(a) + 0.2 * sum_{b in C_a} f_a(b) * w(b)
//   P(phi)  = f(phi) / sum_phi' f(phi')
//   LIDF(a) = P(phi(a)) * IDF(a) * C(a)
//
// Context words are the distinct lemmas of the top-ranked C-Value terms;
// t(c) counts those terms containing c. In constituent mode C_a is the set
// of a's own lemmas that carry a weight and f_a(b) = f(a); in window mode
// C_a holds weighted lemmas seen within the context window of a and f_a(b)
// is the co-occurrence count.

#ifndef TERMRANK_SCORING_H_
#define TERMRANK_SCORING_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "termrank/corpus_stats.h"
#include "termrank/engine.h"
#include "termrank/types.h"

namespace termrank {

enum class Metric { kCValue, kNcValue, kLidf };
enum class ContextMode { kConstituent, kWindow };

// "cvalue", "ncvalue", "lidf"
std::string_view metric_name(Metric metric);
Metric parse_metric(std::string_view name);
// "constituent", "window"
std::string_view context_mode_name(ContextMode mode);
ContextMode parse_context_mode(std::string_view name);

struct TermScore {
  TermKey key;
  double value = 0.0;
};

double c_value(const TermKey& term, const CorpusStats& stats);

struct ContextWeights {
  std::unordered_map<std::string, double> weight;
  std::size_t n_c = 0;

  // 0 when `lemma` is not a context word.
  double at(const std::string& lemma) const;
};

// `ranked` need not be sorted; the top ceil(top_fraction * n) entries by
// value (ties by term ascending) are considered.
ContextWeights context_weights(std::span<const TermScore> ranked,
                               double top_fraction);

struct NcOptions {
  ContextMode mode = ContextMode::kConstituent;
  int window = 5;
};

double nc_value(const TermKey& term, const CorpusStats& stats,
                const ContextWeights& weights, double c_value,
                const NcOptions& options = {});

// Throws Error when no filter occurrence was recorded.
double filter_probability(int filter_id, const CorpusStats& stats);

double lidf_value(const TermKey& term, const CorpusStats& stats, double c_value);

struct RankedTerm {
  TermKey key;
  double raw = 0.0;
  double normalized = 0.0;
};

// Divides by the maximum (all zeros if the maximum is 0) and sorts by
// descending normalized score, then term ascending.
std::vector<RankedTerm> normalize_and_rank(std::span<const TermScore> scores);

struct ScoringOptions {
  bool c_value = true;
  bool nc_value = true;
  bool lidf_value = true;
  NcOptions nc;
  double top_fraction = 1.0;
  ShardOptions shards;
};

struct MetricScores {
  std::optional<double> raw;
  std::optional<double> normalized;
};

struct ScoredTerm {
  TermKey key;
  TermStats stats;
  MetricScores c_value;
  MetricScores nc_value;
  MetricScores lidf_value;
};

// Scores every term of `stats`, in term order. NC-Value and LIDF-Value
// imply C-Value.
std::vector<ScoredTerm> score_corpus(const CorpusStats& stats,
                                     const ScoringOptions& options);

// Per-metric kernels used by score_corpus and the benchmark; results follow
// the term order of `stats`.
std::vector<double> compute_c_values(const CorpusStats& stats,
                                     const ShardOptions& shards = {});
std::vector<double> compute_nc_values(const CorpusStats& stats,
                                      std::span<const double> c_values,
                                      double top_fraction, const NcOptions& nc,
                                      const ShardOptions& shards = {});
std::vector<double> compute_lidf_values(const CorpusStats& stats,
                                        std::span<const double> c_values,
                                        const ShardOptions& shards = {});

}  // namespace termrank

#endif  // TERMRANK_SCORING_H_
