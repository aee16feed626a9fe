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

#include "termrank/corpus_stats.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>
#include <utility>

namespace termrank {

void CandidatePartial::merge(CandidatePartial& into, CandidatePartial&& from) {
  for (auto& [key, occ] : from.first) {
    auto [it, inserted] = into.first.try_emplace(key, occ);
    if (!inserted && occ < it->second) it->second = occ;
  }
  for (const auto& [id, count] : from.filter_counts) {
    into.filter_counts[id] += count;
  }
}

CandidatePartial collect_candidates(const AnnotatedDocument& doc,
                                    std::size_t doc_index,
                                    std::span<const LinguisticFilter> filters) {
  CandidatePartial partial;
  std::vector<PosTag> tags;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence& sentence = doc.sentences[s];
    auto positions = content_positions(sentence);
    tags.clear();
    for (auto p : positions) tags.push_back(sentence[p].pos);
    std::vector<std::string> lemmas;
    for (const auto& span : match_spans(tags, filters)) {
      lemmas.clear();
      for (std::size_t i = 0; i < span.length; ++i) {
        lemmas.push_back(sentence[positions[span.start + i]].lemma);
      }
      // Spans arrive in corpus order, so the first insert is the earliest.
      partial.first.try_emplace(TermKey(lemmas),
                                FirstOccurrence{doc_index, s, span.start,
                                                span.filter_id});
      ++partial.filter_counts[span.filter_id];
    }
  }
  return partial;
}

std::vector<TermKey> CandidateSet::keys() const {
  std::vector<TermKey> out;
  out.reserve(filter_of.size());
  for (const auto& [key, id] : filter_of) out.push_back(key);
  return out;
}

CandidateSet pass1_collect(std::span<const AnnotatedDocument> docs,
                           std::span<const LinguisticFilter> filters,
                           const ShardOptions& options) {
  CandidatePartial merged = run_sharded(
      docs.size(), options, CandidatePartial{},
      [&](std::size_t i) { return collect_candidates(docs[i], i, filters); },
      CandidatePartial::merge,
      [&](std::size_t i) { return docs[i].doc_id; });
  CandidateSet set;
  for (auto& [key, occ] : merged.first) set.filter_of.emplace(key, occ.filter_id);
  set.filter_counts = std::move(merged.filter_counts);
  return set;
}

CandidateMatcher::CandidateMatcher(std::span<const TermKey> candidates)
    : terms_(candidates.begin(), candidates.end()) {
  std::set<std::string> vocab;
  nodes_.emplace_back();
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    int node = 0;
    for (auto& word : terms_[t].words()) {
      auto it = nodes_[node].children.find(word);
      if (it == nodes_[node].children.end()) {
        nodes_.emplace_back();
        int child = static_cast<int>(nodes_.size() - 1);
        nodes_[node].children.emplace(word, child);
        node = child;
      } else {
        node = it->second;
      }
      vocab.insert(std::move(word));
    }
    nodes_[node].term = static_cast<int>(t);
  }
  vocabulary_.assign(vocab.begin(), vocab.end());
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    vocabulary_index_.emplace(vocabulary_[i], static_cast<int>(i));
  }
}

int CandidateMatcher::lemma_id(const std::string& lemma) const {
  auto it = vocabulary_index_.find(lemma);
  return it == vocabulary_index_.end() ? -1 : it->second;
}

void CountPartial::merge(CountPartial& into, CountPartial&& from) {
  for (const auto& [term, c] : from.counts) {
    auto& dst = into.counts[term];
    dst.freq += c.freq;
    dst.doc_freq += c.doc_freq;
  }
  for (auto& [key, hist] : from.context) {
    auto [it, inserted] = into.context.try_emplace(key, std::move(hist));
    if (inserted) continue;
    for (std::size_t d = 0; d < hist.size(); ++d) it->second[d] += hist[d];
  }
}

CountPartial count_document(const AnnotatedDocument& doc,
                            const CandidateMatcher& matcher, int window) {
  CountPartial partial;
  std::vector<int> present;
  std::vector<const std::string*> lemmas;
  std::vector<int> lemma_ids;
  const auto w = static_cast<std::size_t>(std::max(window, 0));
  for (const Sentence& sentence : doc.sentences) {
    lemmas.clear();
    lemma_ids.clear();
    for (const auto& token : sentence) {
      if (token.is_stopword) continue;
      lemmas.push_back(&token.lemma);
      if (w > 0) lemma_ids.push_back(matcher.lemma_id(token.lemma));
    }
    matcher.for_each_occurrence(lemmas, [&](std::size_t start, std::size_t len,
                                            int term) {
      ++partial.counts[term].freq;
      present.push_back(term);
      if (w == 0) return;
      auto add = [&](std::size_t pos, std::size_t distance) {
        int lemma = lemma_ids[pos];
        if (lemma < 0) return;
        auto key = (static_cast<std::uint64_t>(term) << 32) |
                   static_cast<std::uint32_t>(lemma);
        auto& hist = partial.context[key];
        if (hist.empty()) hist.assign(w, 0);
        ++hist[distance - 1];
      };
      for (std::size_t d = 1; d <= w && d <= start; ++d) add(start - d, d);
      for (std::size_t d = 1; d <= w && start + len - 1 + d < lemmas.size(); ++d) {
        add(start + len - 1 + d, d);
      }
    });
  }
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  for (int term : present) ++partial.counts[term].doc_freq;
  return partial;
}

CountPartial pass2_count(std::span<const AnnotatedDocument> docs,
                         const CandidateMatcher& matcher, int window,
                         const ShardOptions& options) {
  return run_sharded(
      docs.size(), options, CountPartial{},
      [&](std::size_t i) { return count_document(docs[i], matcher, window); },
      CountPartial::merge, [&](std::size_t i) { return docs[i].doc_id; });
}

NestedIndex build_nested_index(std::span<const TermKey> candidates) {
  std::unordered_set<std::string> known;
  for (const auto& key : candidates) known.insert(key.str());

  std::map<TermKey, std::set<TermKey>> containers;
  for (const auto& key : candidates) containers[key];
  // Every strict sub-run of length >= 2 of a candidate b that is itself a
  // candidate a gives b in T_a.
  for (const auto& b : candidates) {
    auto words = b.words();
    const std::size_t n = words.size();
    for (std::size_t len = 2; len < n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        std::span<const std::string> sub(words.data() + i, len);
        std::string sub_key = join_words(sub);
        if (known.count(sub_key)) {
          containers[TermKey::from_canonical(sub_key)].insert(b);
        }
      }
    }
  }
  NestedIndex index;
  for (auto& [key, set] : containers) {
    index.emplace(key, std::vector<TermKey>(set.begin(), set.end()));
  }
  return index;
}

double compute_idf(std::int64_t n_docs, std::int64_t doc_freq) {
  if (doc_freq < 1 || doc_freq > n_docs) {
    throw Error("idf undefined for doc_freq " + std::to_string(doc_freq) +
                " with " + std::to_string(n_docs) + " documents");
  }
  return std::log(static_cast<double>(n_docs) / static_cast<double>(doc_freq));
}

std::int64_t CorpusStats::context_count(const TermKey& term,
                                        const std::string& lemma,
                                        int w) const {
  auto t = context.find(term);
  if (t == context.end()) return 0;
  auto l = t->second.find(lemma);
  if (l == t->second.end()) return 0;
  std::int64_t sum = 0;
  const auto limit = std::min<std::size_t>(static_cast<std::size_t>(std::max(w, 0)),
                                           l->second.size());
  for (std::size_t d = 0; d < limit; ++d) sum += l->second[d];
  return sum;
}

const TermStats& CorpusStats::at(const TermKey& term) const {
  auto it = terms.find(term);
  if (it == terms.end()) throw LookupError("unknown term '" + term.str() + "'");
  return it->second;
}

const std::vector<TermKey>& CorpusStats::containers(const TermKey& term) const {
  static const std::vector<TermKey> kNone;
  auto it = nested.find(term);
  return it == nested.end() ? kNone : it->second;
}

CorpusStats compute_corpus_stats(std::span<const AnnotatedDocument> docs,
                                 std::span<const LinguisticFilter> filters,
                                 const StatsOptions& options) {
  if (options.window < 0) throw ConfigError("window must be >= 0");
  CandidateSet candidates = pass1_collect(docs, filters, options.shards);
  auto keys = candidates.keys();
  CandidateMatcher matcher(keys);
  CountPartial counts = pass2_count(docs, matcher, options.window, options.shards);

  CorpusStats stats;
  stats.n_docs = static_cast<std::int64_t>(docs.size());
  stats.window = options.window;
  stats.filters = std::move(candidates.filter_counts);
  for (std::size_t t = 0; t < keys.size(); ++t) {
    const TermCounts& c = counts.counts[static_cast<int>(t)];
    TermStats ts;
    ts.freq = c.freq;
    ts.doc_freq = c.doc_freq;
    ts.length = keys[t].length();
    ts.filter_id = candidates.filter_of.at(keys[t]);
    ts.idf = compute_idf(stats.n_docs, ts.doc_freq);
    stats.terms.emplace(keys[t], ts);
  }
  for (auto& [key, hist] : counts.context) {
    const auto term = static_cast<int>(key >> 32);
    const auto lemma = static_cast<std::size_t>(key & 0xffffffffu);
    stats.context[keys[term]][matcher.vocabulary()[lemma]] = std::move(hist);
  }
  stats.nested = build_nested_index(keys);
  return stats;
}

}  // namespace termrank
