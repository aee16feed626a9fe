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

// Two-pass corpus statistics.
//
// Pass 1 runs the linguistic filters and fixes the candidate set, the filter
// occurrence totals and each term's filter (that of its first occurrence in
// corpus order). Pass 2 recounts every candidate as a raw contiguous run in
// the stopword-free lemma stream of each sentence, independent of the
// filters, so a nested term is always at least as frequent as any term that
// contains it.

#ifndef TERMRANK_CORPUS_STATS_H_
#define TERMRANK_CORPUS_STATS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "termrank/engine.h"
#include "termrank/filters.h"
#include "termrank/types.h"

namespace termrank {

// filter id -> number of candidate occurrences attributed to it.
using FilterStats = std::map<int, std::int64_t>;

struct FirstOccurrence {
  std::size_t doc = 0;
  std::size_t sentence = 0;
  std::size_t start = 0;
  int filter_id = 0;

  auto operator<=>(const FirstOccurrence&) const = default;
};

struct CandidatePartial {
  std::unordered_map<TermKey, FirstOccurrence> first;
  FilterStats filter_counts;

  static void merge(CandidatePartial& into, CandidatePartial&& from);
};

CandidatePartial collect_candidates(const AnnotatedDocument& doc,
                                    std::size_t doc_index,
                                    std::span<const LinguisticFilter> filters);

struct CandidateSet {
  // term -> filter of its first occurrence.
  std::map<TermKey, int> filter_of;
  FilterStats filter_counts;

  std::vector<TermKey> keys() const;
};

CandidateSet pass1_collect(std::span<const AnnotatedDocument> docs,
                           std::span<const LinguisticFilter> filters,
                           const ShardOptions& options = {});

// Trie over candidate lemma sequences. Immutable once built.
class CandidateMatcher {
 public:
  explicit CandidateMatcher(std::span<const TermKey> candidates);

  std::size_t size() const { return terms_.size(); }
  const TermKey& term(int index) const { return terms_[index]; }

  // Lemmas appearing in any candidate, sorted; ids index this vector.
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  // -1 if `lemma` is in no candidate.
  int lemma_id(const std::string& lemma) const;

  // Calls emit(start, length, term_index) for every candidate occurrence
  // in `lemmas`, by increasing (start, length).
  template <class Emit>
  void for_each_occurrence(std::span<const std::string* const> lemmas,
                           Emit&& emit) const;

 private:
  struct Node {
    std::unordered_map<std::string, int> children;
    int term = -1;
  };

  std::vector<TermKey> terms_;
  std::vector<Node> nodes_;
  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, int> vocabulary_index_;
};

struct TermCounts {
  std::int64_t freq = 0;
  std::int64_t doc_freq = 0;
};

// hist[d - 1] = number of (occurrence, token) pairs with the token d
// positions outside the occurrence span.
using DistanceHistogram = std::vector<std::int64_t>;

struct CountPartial {
  std::unordered_map<int, TermCounts> counts;
  // key = term_index << 32 | lemma_id
  std::unordered_map<std::uint64_t, DistanceHistogram> context;

  static void merge(CountPartial& into, CountPartial&& from);
};

CountPartial count_document(const AnnotatedDocument& doc,
                            const CandidateMatcher& matcher, int window);

CountPartial pass2_count(std::span<const AnnotatedDocument> docs,
                         const CandidateMatcher& matcher, int window,
                         const ShardOptions& options = {});

// term -> sorted list of candidates containing it as a strict contiguous
// subsequence (T_a). Every candidate has an entry.
using NestedIndex = std::map<TermKey, std::vector<TermKey>>;

NestedIndex build_nested_index(std::span<const TermKey> candidates);

// ln(n_docs / doc_freq). Throws Error unless 1 <= doc_freq <= n_docs.
double compute_idf(std::int64_t n_docs, std::int64_t doc_freq);

struct TermStats {
  std::int64_t freq = 0;
  std::int64_t doc_freq = 0;
  std::size_t length = 0;
  int filter_id = 0;
  double idf = 0.0;

  bool operator==(const TermStats&) const = default;
};

// term -> context lemma -> histogram, restricted to lemmas that occur in some
// candidate (only those can carry a context weight).
using ContextCounts = std::map<TermKey, std::map<std::string, DistanceHistogram>>;

struct CorpusStats {
  std::int64_t n_docs = 0;
  // Window the context histograms were collected with.
  int window = 0;
  std::map<TermKey, TermStats> terms;
  FilterStats filters;
  NestedIndex nested;
  ContextCounts context;

  // Pairs within `window` (<= this->window) of occurrences of `term`.
  std::int64_t context_count(const TermKey& term, const std::string& lemma,
                             int window) const;
  const TermStats& at(const TermKey& term) const;
  const std::vector<TermKey>& containers(const TermKey& term) const;
};

struct StatsOptions {
  int window = 5;
  ShardOptions shards;
};

CorpusStats compute_corpus_stats(std::span<const AnnotatedDocument> docs,
                                 std::span<const LinguisticFilter> filters,
                                 const StatsOptions& options = {});

template <class Emit>
void CandidateMatcher::for_each_occurrence(
    std::span<const std::string* const> lemmas, Emit&& emit) const {
  for (std::size_t start = 0; start < lemmas.size(); ++start) {
    int node = 0;
    for (std::size_t j = start; j < lemmas.size(); ++j) {
      const auto& children = nodes_[node].children;
      auto it = children.find(*lemmas[j]);
      if (it == children.end()) break;
      node = it->second;
      if (nodes_[node].term >= 0) emit(start, j - start + 1, nodes_[node].term);
    }
  }
}

}  // namespace termrank

#endif  // TERMRANK_CORPUS_STATS_H_
