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

// Corpus ingestion for raw text and for the tab-separated annotated format.
//
// Annotated format, one token per line:
//
//   doc_id <TAB> sent_idx <TAB> surface <TAB> lemma <TAB> upos
//
// Sentences are grouped by (doc_id, sent_idx). A line of the form
// "# doc_id = <id>" declares a document even if it has no tokens; other
// lines starting with '#' and blank lines are ignored. Extra columns past
// the fifth are ignored.

#ifndef TERMRANK_CORPUS_H_
#define TERMRANK_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termrank/stopwords.h"
#include "termrank/types.h"

namespace termrank {

enum class RawFormat { kPlainTextDir, kOneDocPerLine };

// Accepts "plain-text-dir" and "one-doc-per-line".
RawFormat parse_raw_format(std::string_view name);

struct DocumentError {
  std::string doc_id;
  std::string message;
};

struct RawCorpus {
  std::vector<Document> documents;
  // Documents rejected individually (e.g. invalid UTF-8).
  std::vector<DocumentError> errors;
};

// Plain-text-dir: every regular file below `path` is one document, doc_id is
// the path relative to `path`, ordered lexicographically. One-doc-per-line:
// doc_id is the 1-based line number. Throws IoError if `path` is unreadable.
RawCorpus ingest_raw(const std::filesystem::path& path, RawFormat format);

struct AnnotatedCorpus {
  std::vector<AnnotatedDocument> documents;
  // Tokens whose upos is not a universal tag (mapped to OTHER).
  std::size_t unknown_tags = 0;
};

// Stopword flags are assigned from `stopwords` by lemma. Lemmas are passed
// through clean_text; a lemma that cleans to nothing drops the token and one
// that cleans to several words yields one token per word. Throws ParseError
// (position = 1-based line) on malformed lines.
AnnotatedCorpus parse_annotated(std::istream& in, const StopwordList& stopwords);
AnnotatedCorpus ingest_annotated(const std::filesystem::path& path,
                                 const StopwordList& stopwords);

void write_annotated(std::ostream& out,
                     std::span<const AnnotatedDocument> documents);
// Written through a temporary file and renamed into place.
void write_annotated_file(const std::filesystem::path& path,
                          std::span<const AnnotatedDocument> documents);

}  // namespace termrank

#endif  // TERMRANK_CORPUS_H_
