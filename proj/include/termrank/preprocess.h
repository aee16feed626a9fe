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

// Raw text to AnnotatedDocument: sentence segmentation, cleaning,
// tokenization, tagging/lemmatization and stopword flagging.
//
// Sentences are segmented before cleaning so that punctuation can still mark
// boundaries. The annotator sees every token of a sentence, stopwords
// included; stopwords are only flagged here and are removed when filters are
// matched.

#ifndef TERMRANK_PREPROCESS_H_
#define TERMRANK_PREPROCESS_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "termrank/stopwords.h"
#include "termrank/types.h"

namespace termrank {

// Splits on '.', '!', '?', ';' and '\n'. Empty segments are dropped; the
// segments themselves are not trimmed.
std::vector<std::string> segment_sentences(std::string_view text);

// Every non-letter becomes a space, letters are lowercased, runs of spaces
// collapse and the result is trimmed.
std::string clean_text(std::string_view sentence);

std::vector<std::string> tokenize(std::string_view cleaned);

struct TokenAnnotation {
  std::string lemma;
  PosTag pos = PosTag::kOther;
};

// Maps a sentence of surface tokens to (lemma, tag) pairs, one per token.
// Implementations must be deterministic and safe for concurrent const use.
class Annotator {
 public:
  virtual ~Annotator() = default;
  virtual std::vector<TokenAnnotation> annotate(
      std::span<const std::string> surfaces) const = 0;
};

// Tag for a word missing from the lexicon: -ly ADV; -ous, -al, -ive, -ic ADJ;
// -ing, -ed, -ize, -ise VERB; NOUN otherwise. A suffix only applies when it
// leaves a non-empty stem.
PosTag suffix_rule_tag(std::string_view word);

// Lexicon lookup keyed by lowercase surface, with suffix rules for unknown
// words (lemma = surface).
class LexiconAnnotator final : public Annotator {
 public:
  LexiconAnnotator() = default;

  // Tab-separated `surface lemma upos`, one entry per line. Throws
  // ConfigError if the file is missing, ParseError on malformed lines.
  static LexiconAnnotator from_file(const std::filesystem::path& path);
  static LexiconAnnotator from_stream(std::istream& in);

  void add(std::string_view surface, std::string_view lemma, PosTag pos);
  std::size_t size() const { return entries_.size(); }

  std::vector<TokenAnnotation> annotate(
      std::span<const std::string> surfaces) const override;

 private:
  std::unordered_map<std::string, TokenAnnotation> entries_;
};

std::unique_ptr<Annotator> builtin_annotator(
    const std::filesystem::path& lexicon);

struct AnnotateDiagnostics {
  // Sentences dropped because the annotator failed on them.
  std::size_t dropped_sentences = 0;
};

// Pure function of its inputs. Sentences that clean to no tokens are
// omitted; a sentence the annotator fails on is dropped and counted.
AnnotatedDocument annotate(const Document& document, const Annotator& annotator,
                           const StopwordList& stopwords,
                           AnnotateDiagnostics* diagnostics = nullptr);

}  // namespace termrank

#endif  // TERMRANK_PREPROCESS_H_
