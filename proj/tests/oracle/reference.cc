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

#include "oracle/reference.h"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <regex>
#include <set>
#include <unordered_map>

namespace termrank::oracle {

char tag_letter(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return 'N';
    case PosTag::kAdj: return 'A';
    case PosTag::kAdv: return 'R';
    case PosTag::kVerb: return 'V';
    case PosTag::kOther: return 'O';
  }
  return 'O';
}

std::string tag_letters(const std::vector<PosTag>& tags) {
  std::string s;
  for (auto t : tags) s.push_back(tag_letter(t));
  return s;
}

const std::vector<std::pair<int, std::string>>& builtin_filter_regexes() {
  static const std::vector<std::pair<int, std::string>> kFilters = {
      {1, "NN+"}, {2, "A+N+"}, {3, "NA+(NA+)*"}, {4, "N+R+N*"}, {5, "NV+R*A*"},
  };
  return kFilters;
}

int matching_filter(const std::string& letters,
                    const std::vector<std::pair<int, std::string>>& filters) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<std::regex>> compiled;
  static std::map<std::pair<std::string, std::string>, bool> memo;
  std::lock_guard<std::mutex> lock(mu);
  int best = 0;
  for (const auto& [id, pattern] : filters) {
    auto key = std::make_pair(pattern, letters);
    auto it = memo.find(key);
    bool hit;
    if (it != memo.end()) {
      hit = it->second;
    } else {
      auto& re = compiled[pattern];
      if (!re) re = std::make_unique<std::regex>(pattern);
      hit = std::regex_match(letters, *re);
      memo.emplace(std::move(key), hit);
    }
    if (hit && (best == 0 || id < best)) best = id;
  }
  return best;
}

std::vector<RefSpan> reference_spans(
    const std::vector<PosTag>& tags,
    const std::vector<std::pair<int, std::string>>& filters) {
  const std::string letters = tag_letters(tags);
  std::vector<RefSpan> spans;
  for (std::size_t start = 0; start < letters.size(); ++start) {
    for (std::size_t len = 2; start + len <= letters.size(); ++len) {
      int id = matching_filter(letters.substr(start, len), filters);
      if (id) spans.push_back({start, len, id});
    }
  }
  return spans;
}

namespace {

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) s += ' ';
    s += words[i];
  }
  return s;
}

struct Projection {
  std::vector<std::string> lemmas;
  std::vector<PosTag> tags;
};

std::vector<std::vector<Projection>> project(
    const std::vector<AnnotatedDocument>& docs) {
  std::vector<std::vector<Projection>> out;
  for (const auto& doc : docs) {
    std::vector<Projection> sentences;
    for (const auto& sentence : doc.sentences) {
      Projection p;
      for (const auto& tok : sentence) {
        if (tok.is_stopword) continue;
        p.lemmas.push_back(tok.lemma);
        p.tags.push_back(tok.pos);
      }
      sentences.push_back(std::move(p));
    }
    out.push_back(std::move(sentences));
  }
  return out;
}

bool run_at(const std::vector<std::string>& stream, std::size_t start,
            const std::vector<std::string>& words) {
  if (start + words.size() > stream.size()) return false;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (stream[start + k] != words[k]) return false;
  }
  return true;
}

}  // namespace

RefResult reference_pipeline(
    const std::vector<AnnotatedDocument>& docs,
    const std::vector<std::pair<int, std::string>>& filters,
    const RefOptions& options) {
  RefResult result;
  result.n_docs = static_cast<std::int64_t>(docs.size());
  const auto projected = project(docs);

  // Candidates, filter totals and first-occurrence filter.
  for (const auto& doc : projected) {
    for (const auto& sentence : doc) {
      for (const auto& span : reference_spans(sentence.tags, filters)) {
        std::vector<std::string> words(
            sentence.lemmas.begin() + static_cast<std::ptrdiff_t>(span.start),
            sentence.lemmas.begin() +
                static_cast<std::ptrdiff_t>(span.start + span.length));
        ++result.filter_counts[span.filter_id];
        auto key = join(words);
        if (!result.terms.count(key)) {
          RefTerm t;
          t.words = std::move(words);
          t.filter = span.filter_id;
          result.terms.emplace(key, std::move(t));
        }
      }
    }
  }

  // Raw run counts.
  for (auto& [key, term] : result.terms) {
    for (const auto& doc : projected) {
      bool seen = false;
      for (const auto& sentence : doc) {
        for (std::size_t i = 0; i < sentence.lemmas.size(); ++i) {
          if (run_at(sentence.lemmas, i, term.words)) {
            ++term.freq;
            seen = true;
          }
        }
      }
      if (seen) ++term.doc_freq;
    }
  }

  // Pairwise containment.
  for (auto& [a_key, a] : result.terms) {
    for (const auto& [b_key, b] : result.terms) {
      if (a_key == b_key || b.words.size() <= a.words.size()) continue;
      for (std::size_t i = 0; i + a.words.size() <= b.words.size(); ++i) {
        if (run_at(b.words, i, a.words)) {
          a.containers.push_back(b_key);
          break;
        }
      }
    }
  }

  std::int64_t total = 0;
  for (const auto& [id, n] : result.filter_counts) total += n;
  for (const auto& [id, n] : result.filter_counts) {
    result.filter_probability[std::to_string(id)] =
        static_cast<double>(n) / static_cast<double>(total);
  }

  for (auto& [key, t] : result.terms) {
    const double ratio = static_cast<double>(result.n_docs) /
                         static_cast<double>(t.doc_freq);
    t.idf = options.idf_base > 0 ? std::log(ratio) / std::log(options.idf_base)
                                 : std::log(ratio);
    const double len = std::log2(1.0 + static_cast<double>(t.words.size()));
    if (t.containers.empty()) {
      t.c_value = len * static_cast<double>(t.freq);
    } else {
      double sum = 0;
      for (const auto& b : t.containers) {
        sum += static_cast<double>(result.terms.at(b).freq);
      }
      t.c_value = len * (static_cast<double>(t.freq) -
                         sum / static_cast<double>(t.containers.size()));
    }
    const double p = static_cast<double>(result.filter_counts.at(t.filter)) /
                     static_cast<double>(total);
    t.lidf = p * t.idf * t.c_value;
  }

  // Context weights over the top terms by C-Value.
  std::vector<const std::pair<const std::string, RefTerm>*> order;
  for (const auto& entry : result.terms) order.push_back(&entry);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    if (x->second.c_value != y->second.c_value) {
      return x->second.c_value > y->second.c_value;
    }
    return x->first < y->first;
  });
  std::size_t top = 0;
  const double want = options.top_fraction * static_cast<double>(order.size());
  while (top < order.size() && static_cast<double>(top) < want - 1e-9) ++top;
  std::map<std::string, double> weight;
  for (std::size_t i = 0; i < top; ++i) {
    std::set<std::string> distinct(order[i]->second.words.begin(),
                                   order[i]->second.words.end());
    for (const auto& w : distinct) weight[w] += 1.0;
  }
  for (auto& [w, v] : weight) v /= static_cast<double>(top);
  auto w_of = [&](const std::string& lemma) {
    auto it = weight.find(lemma);
    return it == weight.end() ? 0.0 : it->second;
  };

  const auto window = static_cast<std::size_t>(options.window);
  for (auto& [key, t] : result.terms) {
    std::set<std::string> distinct(t.words.begin(), t.words.end());
    double constituent = 0;
    for (const auto& b : distinct) constituent += static_cast<double>(t.freq) * w_of(b);
    t.nc_constituent = 0.8 * t.c_value + 0.2 * constituent;

    std::map<std::string, std::int64_t> cooc;
    for (const auto& doc : projected) {
      for (const auto& sentence : doc) {
        const auto& s = sentence.lemmas;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (!run_at(s, i, t.words)) continue;
          const std::size_t end = i + t.words.size();  // exclusive
          for (std::size_t p = 0; p < s.size(); ++p) {
            std::size_t distance;
            if (p < i) {
              distance = i - p;
            } else if (p >= end) {
              distance = p - end + 1;
            } else {
              continue;
            }
            if (distance <= window) ++cooc[s[p]];
          }
        }
      }
    }
    double ctx = 0;
    for (const auto& [lemma, n] : cooc) ctx += static_cast<double>(n) * w_of(lemma);
    t.nc_window = 0.8 * t.c_value + 0.2 * ctx;
  }
  return result;
}

std::vector<AnnotatedDocument> random_corpus(std::mt19937_64& rng,
                                             std::size_t max_docs,
                                             std::size_t max_sentence_len) {
  static const std::vector<std::pair<std::string, PosTag>> kVocab = {
      {"fault", PosTag::kNoun},  {"system", PosTag::kNoun},
      {"drug", PosTag::kNoun},   {"effect", PosTag::kNoun},
      {"normal", PosTag::kAdj},  {"adverse", PosTag::kAdj},
      {"rapidly", PosTag::kAdv}, {"reduce", PosTag::kVerb},
      {"the", PosTag::kOther},   {"of", PosTag::kOther},
      {"creep", PosTag::kNoun},  {"x", PosTag::kOther},
  };
  std::uniform_int_distribution<std::size_t> n_docs(1, max_docs);
  std::uniform_int_distribution<std::size_t> n_sent(0, 4);
  std::uniform_int_distribution<std::size_t> n_tok(1, max_sentence_len);
  std::uniform_int_distribution<std::size_t> pick(0, kVocab.size() - 1);
  std::uniform_int_distribution<int> tag(0, 4);
  std::bernoulli_distribution retag(0.2);

  std::vector<AnnotatedDocument> docs(n_docs(rng));
  for (std::size_t d = 0; d < docs.size(); ++d) {
    docs[d].doc_id = "d" + std::to_string(d);
    const std::size_t sentences = n_sent(rng);
    for (std::size_t s = 0; s < sentences; ++s) {
      Sentence sentence;
      const std::size_t tokens = n_tok(rng);
      for (std::size_t k = 0; k < tokens; ++k) {
        const auto& [lemma, pos] = kVocab[pick(rng)];
        AnnotatedToken tok{lemma, lemma, pos, lemma == "the" || lemma == "of"};
        if (retag(rng)) tok.pos = static_cast<PosTag>(tag(rng));
        sentence.push_back(std::move(tok));
      }
      docs[d].sentences.push_back(std::move(sentence));
    }
  }
  return docs;
}

bool relative_close(double a, double b, double rel) {
  if (a == b) return true;
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) <= rel * scale;
}

}  // namespace termrank::oracle
