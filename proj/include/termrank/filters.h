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

// Linguistic filters: patterns over PoS classes that select candidate term
// spans.
//
// Pattern syntax: the symbols N (noun), A (adjective), R (adverb) and
// V (verb), parenthesized groups, and the postfix quantifiers '+' (one or
// more) and '*' (zero or more). Whitespace is ignored. Example:
//
//   N A+ (N A+)*

#ifndef TERMRANK_FILTERS_H_
#define TERMRANK_FILTERS_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termrank/types.h"

namespace termrank {

// Compiled pattern (Thompson NFA). Immutable and shareable across threads.
class PosPattern {
 public:
  // Throws ParseError with the byte offset of the problem.
  static PosPattern compile(std::string_view spec);

  // True iff the whole of `tags` matches.
  bool matches(std::span<const PosTag> tags) const;

  // Calls `emit(length)` for every length such that tags[0, length) matches,
  // in increasing order. Zero-length matches are skipped.
  template <class Emit>
  void for_each_prefix_match(std::span<const PosTag> tags, Emit&& emit) const;

  std::size_t state_count() const { return states_.size(); }

 private:
  struct State {
    // kEpsilon states follow `next`/`alt`; kTag states consume `tag` and go
    // to `next`; kAccept has no exits.
    enum Kind : std::uint8_t { kTag, kEpsilon, kAccept } kind = kEpsilon;
    PosTag tag = PosTag::kOther;
    int next = -1;
    int alt = -1;
  };

  void closure(std::vector<int>& set, std::vector<char>& seen) const;

  std::vector<State> states_;
  int start_ = 0;
  int accept_ = 0;

  friend class PatternBuilder;
};

struct LinguisticFilter {
  int id = 0;
  std::string spec;
  PosPattern pattern;
};

// Throws ParseError on a malformed spec.
LinguisticFilter compile_filter(int id, std::string_view spec);

// The five built-in filters, ids 1..5:
//   1: N N+               noun followed by at least one noun
//   2: A+ N+              adjectives then nouns
//   3: N A+ (N A+)*       noun, adjectives, then noun-adjective groups
//   4: N+ R+ N*           nouns, adverbs, optional nouns
//   5: N V+ R* A*         noun, verbs, optional adverbs and adjectives
std::vector<LinguisticFilter> builtin_filters();

// One spec per line (blank lines and '#' comments skipped); ids are assigned
// first_id, first_id + 1, ... in file order.
std::vector<LinguisticFilter> load_filter_file(const std::filesystem::path& path,
                                               int first_id = 6);

struct SpanMatch {
  std::size_t start = 0;
  std::size_t length = 0;
  int filter_id = 0;

  bool operator==(const SpanMatch&) const = default;
};

// All spans of length >= 2 matched in full by some filter, each reported
// once with the lowest matching filter id, ordered by (start, length).
std::vector<SpanMatch> match_spans(std::span<const PosTag> tags,
                                   std::span<const LinguisticFilter> filters);

struct CandidateOccurrence {
  std::vector<std::string> lemmas;
  int filter_id = 0;
  std::string doc_id;
  std::size_t sentence_index = 0;
  // Offset into the stopword-free projection of the sentence.
  std::size_t start = 0;
  std::size_t length = 0;
};

// Indices of the non-stopword tokens of `sentence`.
std::vector<std::size_t> content_positions(const Sentence& sentence);

std::vector<CandidateOccurrence> extract_candidates(
    const Sentence& sentence, std::span<const LinguisticFilter> filters,
    std::string_view doc_id = {}, std::size_t sentence_index = 0);

template <class Emit>
void PosPattern::for_each_prefix_match(std::span<const PosTag> tags,
                                       Emit&& emit) const {
  std::vector<int> current{start_};
  std::vector<int> next;
  std::vector<char> seen(states_.size(), 0);
  closure(current, seen);
  for (std::size_t i = 0; i < tags.size() && !current.empty(); ++i) {
    next.clear();
    for (int s : current) {
      const State& st = states_[s];
      if (st.kind == State::kTag && st.tag == tags[i]) next.push_back(st.next);
    }
    std::fill(seen.begin(), seen.end(), 0);
    closure(next, seen);
    current.swap(next);
    if (seen[accept_]) emit(i + 1);
  }
}

}  // namespace termrank

#endif  // TERMRANK_FILTERS_H_
