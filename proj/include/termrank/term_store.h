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

// Persistent term records.
//
// The canonical store is a JSON Lines file, one record per line, sorted by
// term, with fields in a fixed order:
//
//   term words filter length freq doc_freq idf
//   c_value nc_value lidf_value c_value_norm nc_value_norm lidf_value_norm
//   meta
//
// Score fields are omitted until their metric has been computed. Writes go
// through a temporary file and a rename, guarded by "<store>.lock".
//
// The corpus-level statistics that records do not carry (document count,
// filter totals, context co-occurrence) live in a sidecar snapshot,
// "<store>.stats.json".

#ifndef TERMRANK_TERM_STORE_H_
#define TERMRANK_TERM_STORE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termrank/corpus_stats.h"
#include "termrank/scoring.h"

namespace termrank {

inline constexpr std::string_view kPipelineVersion = "termrank-1.0";

struct RunMeta {
  std::int64_t n_docs = 0;
  std::string context_mode = "constituent";
  int window = 5;
  double top_fraction = 1.0;
  std::string pipeline_version = std::string(kPipelineVersion);

  bool operator==(const RunMeta&) const = default;
};

struct TermRecord {
  std::string term;
  std::vector<std::string> words;
  int filter = 0;
  std::int64_t length = 0;
  std::int64_t freq = 0;
  std::int64_t doc_freq = 0;
  double idf = 0.0;
  std::optional<double> c_value;
  std::optional<double> nc_value;
  std::optional<double> lidf_value;
  std::optional<double> c_value_norm;
  std::optional<double> nc_value_norm;
  std::optional<double> lidf_value_norm;
  RunMeta meta;

  std::optional<double> raw(Metric metric) const;
  std::optional<double> normalized(Metric metric) const;
  void set(Metric metric, double raw, double normalized);

  bool operator==(const TermRecord&) const = default;
};

std::string to_json_line(const TermRecord& record);
// Throws ParseError (position = `line_no`) on malformed input.
TermRecord parse_json_line(std::string_view line, std::size_t line_no = 0);

// put/update/get/scan over records keyed by term.
class StoreBackend {
 public:
  virtual ~StoreBackend() = default;
  // Throws Error if the term already exists.
  virtual void put(TermRecord record) = 0;
  // Changes only the metric's raw and normalized fields. Throws LookupError
  // for an unknown term.
  virtual void update(const std::string& term, Metric metric, double raw,
                      double normalized) = 0;
  virtual std::optional<TermRecord> get(const std::string& term) const = 0;
  // All records, term ascending.
  virtual std::vector<TermRecord> scan() const = 0;
};

class MemoryStore : public StoreBackend {
 public:
  void put(TermRecord record) override;
  void update(const std::string& term, Metric metric, double raw,
              double normalized) override;
  std::optional<TermRecord> get(const std::string& term) const override;
  std::vector<TermRecord> scan() const override;

  void set_meta(const RunMeta& meta);
  std::size_t size() const { return records_.size(); }

 private:
  std::map<std::string, TermRecord> records_;
};

// File-backed store: loaded on open, written back by save().
class JsonlStore final : public MemoryStore {
 public:
  // A missing file opens an empty store when `must_exist` is false.
  explicit JsonlStore(std::filesystem::path path, bool must_exist = true);
  void save() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::vector<TermRecord> read_records(const std::filesystem::path& path);

// Sorted by term; throws Error naming a duplicated term. Atomic.
void write_records(std::vector<TermRecord> records,
                   const std::filesystem::path& path);

struct ScoreValue {
  double raw = 0.0;
  double normalized = 0.0;
};

void update_scores(const std::filesystem::path& path, Metric metric,
                   const std::map<std::string, ScoreValue>& values);
void update_meta(const std::filesystem::path& path, const RunMeta& meta);

// Throws Error if some record lacks the metric.
std::vector<TermRecord> top_k(const std::filesystem::path& path, Metric metric,
                              std::size_t k);
std::vector<TermRecord> top_k(std::span<const TermRecord> records, Metric metric,
                              std::size_t k);

enum class SearchMode { kExact, kSubstring };
SearchMode parse_search_mode(std::string_view name);

std::vector<TermRecord> search(const std::filesystem::path& path,
                               std::string_view query, SearchMode mode);

// True if some other record's words contain `record`'s words as a strict
// contiguous run.
bool is_nested(const TermRecord& record, std::span<const TermRecord> all);

std::vector<TermRecord> records_from_stats(const CorpusStats& stats,
                                           const RunMeta& meta);

std::filesystem::path snapshot_path(const std::filesystem::path& store);
void write_snapshot(const CorpusStats& stats, const std::filesystem::path& path);

// Rebuilds the statistics from a store and its snapshot: terms from records,
// nested index from the record set.
CorpusStats load_corpus_stats(const std::filesystem::path& store);

}  // namespace termrank

#endif  // TERMRANK_TERM_STORE_H_
