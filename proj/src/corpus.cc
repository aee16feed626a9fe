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

#include "termrank/corpus.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "termrank/preprocess.h"
#include "termrank/utf8.h"

namespace termrank {

namespace fs = std::filesystem;

RawFormat parse_raw_format(std::string_view name) {
  if (name == "plain-text-dir") return RawFormat::kPlainTextDir;
  if (name == "one-doc-per-line") return RawFormat::kOneDocPerLine;
  throw ConfigError("unknown raw format '" + std::string(name) +
                    "' (expected plain-text-dir or one-doc-per-line)");
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void add_document(RawCorpus& corpus, std::string doc_id, std::string text) {
  if (!utf8::is_valid(text)) {
    corpus.errors.push_back({std::move(doc_id), "invalid UTF-8"});
    return;
  }
  corpus.documents.push_back({std::move(doc_id), std::move(text)});
}

}  // namespace

RawCorpus ingest_raw(const fs::path& path, RawFormat format) {
  RawCorpus corpus;
  std::error_code ec;
  if (format == RawFormat::kPlainTextDir) {
    if (!fs::is_directory(path, ec)) {
      throw IoError("'" + path.string() + "' is not a readable directory");
    }
    std::vector<std::string> files;
    for (auto it = fs::recursive_directory_iterator(path, ec);
         !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (it->is_regular_file()) {
        files.push_back(fs::relative(it->path(), path).generic_string());
      }
    }
    if (ec) throw IoError("cannot list '" + path.string() + "': " + ec.message());
    std::sort(files.begin(), files.end());
    for (auto& rel : files) {
      std::string text = read_file(path / rel);
      add_document(corpus, std::move(rel), std::move(text));
    }
    return corpus;
  }

  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path, ec)) {
    throw IoError("cannot read '" + path.string() + "'");
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    add_document(corpus, std::to_string(line_no), std::move(line));
  }
  return corpus;
}

namespace {

constexpr std::string_view kDocHeader = "# doc_id = ";

struct DocBuilder {
  std::string doc_id;
  std::map<long long, Sentence> sentences;
};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t begin = 0;
  while (true) {
    auto tab = line.find('\t', begin);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(begin));
      return cols;
    }
    cols.push_back(line.substr(begin, tab - begin));
    begin = tab + 1;
  }
}

}  // namespace

AnnotatedCorpus parse_annotated(std::istream& in,
                                const StopwordList& stopwords) {
  AnnotatedCorpus corpus;
  std::vector<DocBuilder> docs;
  std::unordered_map<std::string, std::size_t> index;
  auto doc_for = [&](std::string_view id) -> DocBuilder& {
    auto [it, inserted] = index.try_emplace(std::string(id), docs.size());
    if (inserted) docs.push_back({std::string(id), {}});
    return docs[it->second];
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (std::string_view(line).starts_with(kDocHeader)) {
        doc_for(std::string_view(line).substr(kDocHeader.size()));
      }
      continue;
    }
    auto cols = split_tabs(line);
    auto fail = [&](const std::string& why) {
      throw ParseError("annotated corpus line " + std::to_string(line_no) +
                           ": " + why,
                       line_no);
    };
    if (cols.size() < 5) fail("expected 5 tab-separated columns");
    if (cols[0].empty()) fail("empty doc_id");
    long long sent_idx = 0;
    auto [ptr, err] = std::from_chars(cols[1].data(),
                                      cols[1].data() + cols[1].size(), sent_idx);
    if (err != std::errc() || ptr != cols[1].data() + cols[1].size() ||
        sent_idx < 0) {
      fail("sent_idx '" + std::string(cols[1]) +
           "' is not a non-negative integer");
    }
    bool known = true;
    PosTag tag = pos_from_upos(cols[4], &known);
    if (!known) ++corpus.unknown_tags;

    Sentence& sentence = doc_for(cols[0]).sentences[sent_idx];
    for (auto& lemma : tokenize(clean_text(cols[3]))) {
      bool stop = stopwords.contains(lemma);
      sentence.push_back(
          AnnotatedToken{std::string(cols[2]), std::move(lemma), tag, stop});
    }
  }

  corpus.documents.reserve(docs.size());
  for (auto& builder : docs) {
    AnnotatedDocument doc{std::move(builder.doc_id), {}};
    for (auto& [idx, sentence] : builder.sentences) {
      if (!sentence.empty()) doc.sentences.push_back(std::move(sentence));
    }
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

AnnotatedCorpus ingest_annotated(const fs::path& path,
                                 const StopwordList& stopwords) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read annotated corpus '" + path.string() + "'");
  return parse_annotated(in, stopwords);
}

void write_annotated(std::ostream& out,
                     std::span<const AnnotatedDocument> documents) {
  for (const auto& doc : documents) {
    if (doc.doc_id.find_first_of("\t\n\r") != std::string::npos) {
      throw Error("doc_id '" + doc.doc_id + "' contains a tab or newline");
    }
    out << kDocHeader << doc.doc_id << '\n';
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      for (const auto& token : doc.sentences[s]) {
        out << doc.doc_id << '\t' << s << '\t' << token.surface << '\t'
            << token.lemma << '\t' << to_upos(token.pos) << '\n';
      }
    }
  }
}

void write_annotated_file(const fs::path& path,
                          std::span<const AnnotatedDocument> documents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    write_annotated(out, documents);
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
    fs::remove(tmp, ec);
    throw IoError("cannot rename into '" + path.string() + "'");
  }
}

}  // namespace termrank
