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

#include "termrank/term_store.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace termrank {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::optional<double> TermRecord::raw(Metric metric) const {
  switch (metric) {
    case Metric::kCValue: return c_value;
    case Metric::kNcValue: return nc_value;
    case Metric::kLidf: return lidf_value;
  }
  return std::nullopt;
}

std::optional<double> TermRecord::normalized(Metric metric) const {
  switch (metric) {
    case Metric::kCValue: return c_value_norm;
    case Metric::kNcValue: return nc_value_norm;
    case Metric::kLidf: return lidf_value_norm;
  }
  return std::nullopt;
}

void TermRecord::set(Metric metric, double raw_value, double normalized_value) {
  switch (metric) {
    case Metric::kCValue:
      c_value = raw_value;
      c_value_norm = normalized_value;
      break;
    case Metric::kNcValue:
      nc_value = raw_value;
      nc_value_norm = normalized_value;
      break;
    case Metric::kLidf:
      lidf_value = raw_value;
      lidf_value_norm = normalized_value;
      break;
  }
}

std::string to_json_line(const TermRecord& r) {
  ordered_json j;
  j["term"] = r.term;
  j["words"] = r.words;
  j["filter"] = r.filter;
  j["length"] = r.length;
  j["freq"] = r.freq;
  j["doc_freq"] = r.doc_freq;
  j["idf"] = r.idf;
  auto put = [&](const char* name, const std::optional<double>& v) {
    if (v) j[name] = *v;
  };
  put("c_value", r.c_value);
  put("nc_value", r.nc_value);
  put("lidf_value", r.lidf_value);
  put("c_value_norm", r.c_value_norm);
  put("nc_value_norm", r.nc_value_norm);
  put("lidf_value_norm", r.lidf_value_norm);
  ordered_json meta;
  meta["n_docs"] = r.meta.n_docs;
  meta["context_mode"] = r.meta.context_mode;
  meta["window"] = r.meta.window;
  meta["top_fraction"] = r.meta.top_fraction;
  meta["pipeline_version"] = r.meta.pipeline_version;
  j["meta"] = std::move(meta);
  return j.dump();
}

TermRecord parse_json_line(std::string_view line, std::size_t line_no) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("store line " + std::to_string(line_no) + ": " + why,
                      line_no);
  };
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  }
  if (!j.is_object()) throw fail("expected a JSON object");
  TermRecord r;
  try {
    r.term = j.at("term").get<std::string>();
    r.words = j.at("words").get<std::vector<std::string>>();
    r.filter = j.at("filter").get<int>();
    r.length = j.at("length").get<std::int64_t>();
    r.freq = j.at("freq").get<std::int64_t>();
    r.doc_freq = j.at("doc_freq").get<std::int64_t>();
    r.idf = j.at("idf").get<double>();
    auto opt = [&](const char* name) -> std::optional<double> {
      auto it = j.find(name);
      if (it == j.end() || it->is_null()) return std::nullopt;
      return it->get<double>();
    };
    r.c_value = opt("c_value");
    r.nc_value = opt("nc_value");
    r.lidf_value = opt("lidf_value");
    r.c_value_norm = opt("c_value_norm");
    r.nc_value_norm = opt("nc_value_norm");
    r.lidf_value_norm = opt("lidf_value_norm");
    const auto& meta = j.at("meta");
    r.meta.n_docs = meta.at("n_docs").get<std::int64_t>();
    r.meta.context_mode = meta.at("context_mode").get<std::string>();
    r.meta.window = meta.at("window").get<int>();
    r.meta.top_fraction = meta.at("top_fraction").get<double>();
    r.meta.pipeline_version = meta.at("pipeline_version").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  }
  if (r.words.size() < 2 || static_cast<std::int64_t>(r.words.size()) != r.length) {
    throw fail("length must equal the number of words (>= 2)");
  }
  if (join_words(r.words) != r.term) {
    throw fail("term '" + r.term + "' does not match its words");
  }
  return r;
}

void MemoryStore::put(TermRecord record) {
  auto term = record.term;
  auto [it, inserted] = records_.try_emplace(term, std::move(record));
  if (!inserted) throw Error("duplicate term '" + term + "'");
}

void MemoryStore::update(const std::string& term, Metric metric, double raw,
                         double normalized) {
  auto it = records_.find(term);
  if (it == records_.end()) {
    throw LookupError("term '" + term + "' is not in the store");
  }
  it->second.set(metric, raw, normalized);
}

std::optional<TermRecord> MemoryStore::get(const std::string& term) const {
  auto it = records_.find(term);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

std::vector<TermRecord> MemoryStore::scan() const {
  std::vector<TermRecord> out;
  out.reserve(records_.size());
  for (const auto& [term, record] : records_) out.push_back(record);
  return out;
}

void MemoryStore::set_meta(const RunMeta& meta) {
  for (auto& [term, record] : records_) record.meta = meta;
}

namespace {

// Exclusive "<path>.lock" for the lifetime of the object.
class WriteLock {
 public:
  explicit WriteLock(const fs::path& target) : lock_(target) {
    lock_ += ".lock";
    int fd = ::open(lock_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0) {
      if (errno == EEXIST) {
        throw Error("concurrent writer detected: lock file '" + lock_.string() +
                    "' exists");
      }
      throw IoError("cannot create lock file '" + lock_.string() +
                    "': " + std::strerror(errno));
    }
    ::close(fd);
  }
  ~WriteLock() {
    std::error_code ec;
    fs::remove(lock_, ec);
  }
  WriteLock(const WriteLock&) = delete;
  WriteLock& operator=(const WriteLock&) = delete;

 private:
  fs::path lock_;
};

void atomic_write(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move store into '" + path.string() + "': " + ec.message());
  }
}

std::string serialize(const std::vector<TermRecord>& sorted) {
  std::string out;
  for (const auto& r : sorted) {
    out += to_json_line(r);
    out.push_back('\n');
  }
  return out;
}

}  // namespace

JsonlStore::JsonlStore(fs::path path, bool must_exist) : path_(std::move(path)) {
  std::ifstream in(path_, std::ios::binary);
  if (!in) {
    if (must_exist) throw IoError("cannot read store '" + path_.string() + "'");
    return;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto record = parse_json_line(line, line_no);
    try {
      put(std::move(record));
    } catch (const Error& e) {
      throw ParseError("store line " + std::to_string(line_no) + ": " + e.what(),
                       line_no);
    }
  }
}

void JsonlStore::save() const {
  WriteLock lock(path_);
  atomic_write(path_, serialize(scan()));
}

std::vector<TermRecord> read_records(const fs::path& path) {
  return JsonlStore(path).scan();
}

void write_records(std::vector<TermRecord> records, const fs::path& path) {
  std::sort(records.begin(), records.end(),
            [](const TermRecord& a, const TermRecord& b) { return a.term < b.term; });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].term == records[i - 1].term) {
      throw Error("duplicate term '" + records[i].term + "'");
    }
  }
  WriteLock lock(path);
  atomic_write(path, serialize(records));
}

void update_scores(const fs::path& path, Metric metric,
                   const std::map<std::string, ScoreValue>& values) {
  JsonlStore store(path);
  for (const auto& [term, v] : values) store.update(term, metric, v.raw, v.normalized);
  if (!values.empty()) store.save();
}

void update_meta(const fs::path& path, const RunMeta& meta) {
  JsonlStore store(path);
  store.set_meta(meta);
  store.save();
}

std::vector<TermRecord> top_k(std::span<const TermRecord> records, Metric metric,
                              std::size_t k) {
  for (const auto& r : records) {
    if (!r.normalized(metric)) {
      throw Error("metric " + std::string(metric_name(metric)) +
                  " has not been computed for this store; run `termrank score "
                  "--metrics " + std::string(metric_name(metric)) + "` first");
    }
  }
  std::vector<const TermRecord*> order;
  for (const auto& r : records) order.push_back(&r);
  const std::size_t n = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n),
                    order.end(), [&](const TermRecord* a, const TermRecord* b) {
                      double x = *a->normalized(metric), y = *b->normalized(metric);
                      if (x != y) return x > y;
                      return a->term < b->term;
                    });
  std::vector<TermRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(*order[i]);
  return out;
}

std::vector<TermRecord> top_k(const fs::path& path, Metric metric, std::size_t k) {
  auto records = read_records(path);
  return top_k(records, metric, k);
}

SearchMode parse_search_mode(std::string_view name) {
  if (name == "exact") return SearchMode::kExact;
  if (name == "substring") return SearchMode::kSubstring;
  throw ConfigError("unknown search mode '" + std::string(name) +
                    "' (expected exact or substring)");
}

std::vector<TermRecord> search(const fs::path& path, std::string_view query,
                               SearchMode mode) {
  JsonlStore store(path);
  if (mode == SearchMode::kExact) {
    auto hit = store.get(std::string(query));
    if (!hit) return {};
    return {std::move(*hit)};
  }
  std::vector<TermRecord> out;
  for (auto& r : store.scan()) {
    if (r.term.find(query) != std::string::npos) out.push_back(std::move(r));
  }
  return out;
}

bool is_nested(const TermRecord& record, std::span<const TermRecord> all) {
  for (const auto& other : all) {
    if (other.words.size() <= record.words.size()) continue;
    auto it = std::search(other.words.begin(), other.words.end(),
                          record.words.begin(), record.words.end());
    if (it != other.words.end()) return true;
  }
  return false;
}

std::vector<TermRecord> records_from_stats(const CorpusStats& stats,
                                           const RunMeta& meta) {
  std::vector<TermRecord> out;
  out.reserve(stats.terms.size());
  for (const auto& [key, ts] : stats.terms) {
    TermRecord r;
    r.term = key.str();
    r.words = key.words();
    r.filter = ts.filter_id;
    r.length = static_cast<std::int64_t>(ts.length);
    r.freq = ts.freq;
    r.doc_freq = ts.doc_freq;
    r.idf = ts.idf;
    r.meta = meta;
    out.push_back(std::move(r));
  }
  return out;
}

fs::path snapshot_path(const fs::path& store) {
  fs::path p = store;
  p += ".stats.json";
  return p;
}

void write_snapshot(const CorpusStats& stats, const fs::path& path) {
  ordered_json j;
  j["n_docs"] = stats.n_docs;
  j["window"] = stats.window;
  ordered_json filters = ordered_json::object();
  for (const auto& [id, count] : stats.filters) filters[std::to_string(id)] = count;
  j["filters"] = std::move(filters);
  ordered_json context = ordered_json::object();
  for (const auto& [term, lemmas] : stats.context) {
    ordered_json per_term = ordered_json::object();
    for (const auto& [lemma, hist] : lemmas) per_term[lemma] = hist;
    context[term.str()] = std::move(per_term);
  }
  j["context"] = std::move(context);
  WriteLock lock(path);
  atomic_write(path, j.dump() + "\n");
}

CorpusStats load_corpus_stats(const fs::path& store) {
  auto records = read_records(store);
  const fs::path snap = snapshot_path(store);
  std::ifstream in(snap);
  if (!in) throw IoError("cannot read statistics snapshot '" + snap.string() + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("snapshot '" + snap.string() + "': " + e.what(), 0);
  }

  CorpusStats stats;
  try {
    stats.n_docs = j.at("n_docs").get<std::int64_t>();
    stats.window = j.at("window").get<int>();
    for (const auto& [id, count] : j.at("filters").items()) {
      stats.filters[std::stoi(id)] = count.get<std::int64_t>();
    }
    for (const auto& [term, lemmas] : j.at("context").items()) {
      auto& per_term = stats.context[TermKey::from_canonical(term)];
      for (const auto& [lemma, hist] : lemmas.items()) {
        per_term[lemma] = hist.get<DistanceHistogram>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("snapshot '" + snap.string() + "': " + e.what(), 0);
  }

  std::vector<TermKey> keys;
  keys.reserve(records.size());
  for (const auto& r : records) {
    TermKey key(r.words);
    TermStats ts;
    ts.freq = r.freq;
    ts.doc_freq = r.doc_freq;
    ts.length = static_cast<std::size_t>(r.length);
    ts.filter_id = r.filter;
    ts.idf = r.idf;
    stats.terms.emplace(key, ts);
    keys.push_back(std::move(key));
  }
  stats.nested = build_nested_index(keys);
  return stats;
}

}  // namespace termrank
