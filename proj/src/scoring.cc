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

#include "termrank/scoring.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace termrank {

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::kCValue: return "cvalue";
    case Metric::kNcValue: return "ncvalue";
    case Metric::kLidf: return "lidf";
  }
  return "cvalue";
}

Metric parse_metric(std::string_view name) {
  if (name == "cvalue") return Metric::kCValue;
  if (name == "ncvalue") return Metric::kNcValue;
  if (name == "lidf") return Metric::kLidf;
  throw ConfigError("unknown metric '" + std::string(name) +
                    "' (expected cvalue, ncvalue or lidf)");
}

std::string_view context_mode_name(ContextMode mode) {
  return mode == ContextMode::kWindow ? "window" : "constituent";
}

ContextMode parse_context_mode(std::string_view name) {
  if (name == "constituent") return ContextMode::kConstituent;
  if (name == "window") return ContextMode::kWindow;
  throw ConfigError("unknown context mode '" + std::string(name) +
                    "' (expected constituent or window)");
}

double c_value(const TermKey& term, const CorpusStats& stats) {
  const TermStats& ts = stats.at(term);
  const double length_factor = std::log2(1.0 + static_cast<double>(ts.length));
  const auto& containers = stats.containers(term);
  auto f = static_cast<double>(ts.freq);
  if (containers.empty()) return length_factor * f;
  double nested = 0.0;
  for (const auto& b : containers) nested += static_cast<double>(stats.at(b).freq);
  return length_factor * (f - nested / static_cast<double>(containers.size()));
}

double ContextWeights::at(const std::string& lemma) const {
  auto it = weight.find(lemma);
  return it == weight.end() ? 0.0 : it->second;
}

namespace {

bool ranks_before(double a, const TermKey& ka, double b, const TermKey& kb) {
  if (a != b) return a > b;
  return ka < kb;
}

void check_top_fraction(double top_fraction) {
  if (!(top_fraction > 0.0 && top_fraction <= 1.0)) {
    throw ConfigError("top_fraction must be in (0, 1]");
  }
}

}  // namespace

ContextWeights context_weights(std::span<const TermScore> ranked,
                               double top_fraction) {
  check_top_fraction(top_fraction);
  ContextWeights weights;
  if (ranked.empty()) return weights;

  std::vector<const TermScore*> order;
  order.reserve(ranked.size());
  for (const auto& s : ranked) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const TermScore* a, const TermScore* b) {
    return ranks_before(a->value, a->key, b->value, b->key);
  });

  const auto n = static_cast<double>(ranked.size());
  // The epsilon keeps products such as 0.3 * 10 from rounding up a term.
  auto top = static_cast<std::size_t>(std::ceil(top_fraction * n - 1e-9));
  top = std::clamp<std::size_t>(top, 1, ranked.size());

  std::unordered_map<std::string, std::size_t> term_count;
  for (std::size_t i = 0; i < top; ++i) {
    auto words = order[i]->key.words();
    std::set<std::string> distinct(words.begin(), words.end());
    for (const auto& w : distinct) ++term_count[w];
  }
  weights.n_c = top;
  for (const auto& [lemma, count] : term_count) {
    weights.weight.emplace(lemma, static_cast<double>(count) /
                                      static_cast<double>(top));
  }
  return weights;
}

double nc_value(const TermKey& term, const CorpusStats& stats,
                const ContextWeights& weights, double c_value,
                const NcOptions& options) {
  const TermStats& ts = stats.at(term);
  double context = 0.0;
  if (options.mode == ContextMode::kConstituent) {
    auto words = term.words();
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    const auto f = static_cast<double>(ts.freq);
    for (const auto& b : words) context += f * weights.at(b);
  } else {
    auto it = stats.context.find(term);
    if (it != stats.context.end()) {
      for (const auto& [lemma, hist] : it->second) {
        const double w = weights.at(lemma);
        if (w == 0.0) continue;
        context += static_cast<double>(stats.context_count(term, lemma, options.window)) * w;
      }
    }
  }
  return 0.8 * c_value + 0.2 * context;
}

double filter_probability(int filter_id, const CorpusStats& stats) {
  std::int64_t total = 0;
  for (const auto& [id, count] : stats.filters) total += count;
  if (total <= 0) {
    throw Error("filter probability undefined: no filter occurrences recorded");
  }
  auto it = stats.filters.find(filter_id);
  const std::int64_t count = it == stats.filters.end() ? 0 : it->second;
  return static_cast<double>(count) / static_cast<double>(total);
}

double lidf_value(const TermKey& term, const CorpusStats& stats, double c_value) {
  const TermStats& ts = stats.at(term);
  return filter_probability(ts.filter_id, stats) * ts.idf * c_value;
}

std::vector<RankedTerm> normalize_and_rank(std::span<const TermScore> scores) {
  double max = 0.0;
  for (const auto& s : scores) max = std::max(max, s.value);
  std::vector<RankedTerm> ranked;
  ranked.reserve(scores.size());
  for (const auto& s : scores) {
    ranked.push_back({s.key, s.value, max > 0.0 ? s.value / max : 0.0});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedTerm& a, const RankedTerm& b) {
    return ranks_before(a.normalized, a.key, b.normalized, b.key);
  });
  return ranked;
}

namespace {

std::vector<const TermKey*> term_order(const CorpusStats& stats) {
  std::vector<const TermKey*> keys;
  keys.reserve(stats.terms.size());
  for (const auto& [key, ts] : stats.terms) keys.push_back(&key);
  return keys;
}

std::vector<TermScore> as_scores(const std::vector<const TermKey*>& keys,
                                 std::span<const double> values) {
  std::vector<TermScore> out;
  out.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) out.push_back({*keys[i], values[i]});
  return out;
}

void fill_metric(std::vector<ScoredTerm>& out, std::span<const double> raw,
                 const std::vector<const TermKey*>& keys,
                 MetricScores ScoredTerm::*field) {
  auto ranked = normalize_and_rank(as_scores(keys, raw));
  std::unordered_map<TermKey, double> normalized;
  for (const auto& r : ranked) normalized.emplace(r.key, r.normalized);
  for (std::size_t i = 0; i < out.size(); ++i) {
    (out[i].*field).raw = raw[i];
    (out[i].*field).normalized = normalized.at(out[i].key);
  }
}

}  // namespace

std::vector<double> compute_c_values(const CorpusStats& stats,
                                     const ShardOptions& shards) {
  auto keys = term_order(stats);
  return parallel_map<double>(keys.size(), shards, [&](std::size_t i) {
    return c_value(*keys[i], stats);
  });
}

std::vector<double> compute_nc_values(const CorpusStats& stats,
                                      std::span<const double> c_values,
                                      double top_fraction, const NcOptions& nc,
                                      const ShardOptions& shards) {
  if (nc.mode == ContextMode::kWindow && nc.window > stats.window) {
    throw ConfigError("window " + std::to_string(nc.window) +
                      " exceeds the window the statistics were collected with (" +
                      std::to_string(stats.window) + ")");
  }
  if (nc.window < 0) throw ConfigError("window must be >= 0");
  auto keys = term_order(stats);
  auto weights = context_weights(as_scores(keys, c_values), top_fraction);
  return parallel_map<double>(keys.size(), shards, [&](std::size_t i) {
    return nc_value(*keys[i], stats, weights, c_values[i], nc);
  });
}

std::vector<double> compute_lidf_values(const CorpusStats& stats,
                                        std::span<const double> c_values,
                                        const ShardOptions& shards) {
  auto keys = term_order(stats);
  return parallel_map<double>(keys.size(), shards, [&](std::size_t i) {
    return lidf_value(*keys[i], stats, c_values[i]);
  });
}

std::vector<ScoredTerm> score_corpus(const CorpusStats& stats,
                                     const ScoringOptions& options) {
  check_top_fraction(options.top_fraction);
  std::vector<ScoredTerm> out;
  out.reserve(stats.terms.size());
  for (const auto& [key, ts] : stats.terms) out.push_back({key, ts, {}, {}, {}});
  if (out.empty()) return out;

  const bool want_c = options.c_value || options.nc_value || options.lidf_value;
  if (!want_c) return out;
  auto keys = term_order(stats);
  auto c = compute_c_values(stats, options.shards);
  fill_metric(out, c, keys, &ScoredTerm::c_value);
  if (options.nc_value) {
    auto nc = compute_nc_values(stats, c, options.top_fraction, options.nc,
                                options.shards);
    fill_metric(out, nc, keys, &ScoredTerm::nc_value);
  }
  if (options.lidf_value) {
    auto lidf = compute_lidf_values(stats, c, options.shards);
    fill_metric(out, lidf, keys, &ScoredTerm::lidf_value);
  }
  return out;
}

}  // namespace termrank
