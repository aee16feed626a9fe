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

// Core domain types shared by every stage of the pipeline.

#ifndef TERMRANK_TYPES_H_
#define TERMRANK_TYPES_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace termrank {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad flags, missing data files, invalid parameters. Maps to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. `position` is a byte offset or a 1-based line
// number depending on the input kind.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

enum class PosTag : std::uint8_t { kNoun, kAdj, kAdv, kVerb, kOther };

// Maps a universal PoS tag onto the coarse classes. `known` (optional) is
// cleared when the tag is not part of the universal tag set.
PosTag pos_from_upos(std::string_view upos, bool* known = nullptr);

// Universal tag used when exporting; OTHER is exported as "X".
std::string_view to_upos(PosTag tag);

struct Document {
  std::string doc_id;
  std::string text;
};

struct AnnotatedToken {
  std::string surface;
  std::string lemma;
  PosTag pos = PosTag::kOther;
  bool is_stopword = false;

  bool operator==(const AnnotatedToken&) const = default;
};

using Sentence = std::vector<AnnotatedToken>;

struct AnnotatedDocument {
  std::string doc_id;
  std::vector<Sentence> sentences;

  bool operator==(const AnnotatedDocument&) const = default;
};

// A candidate term: a sequence of at least two lemmas. Stored in canonical
// form (lemmas joined by a single space); ordering and equality are those of
// the canonical string.
class TermKey {
 public:
  TermKey() = default;
  explicit TermKey(std::span<const std::string> lemmas);

  // Throws ParseError unless `canonical` is >= 2 non-empty words separated
  // by single spaces.
  static TermKey from_canonical(std::string_view canonical);

  const std::string& str() const { return canonical_; }
  std::size_t length() const { return length_; }
  std::vector<std::string> words() const;

  bool operator==(const TermKey& other) const {
    return canonical_ == other.canonical_;
  }
  std::strong_ordering operator<=>(const TermKey& other) const {
    return canonical_ <=> other.canonical_;
  }

 private:
  std::string canonical_;
  std::size_t length_ = 0;
};

// Splits on single spaces.
std::vector<std::string> split_words(std::string_view text);
std::string join_words(std::span<const std::string> words);

}  // namespace termrank

template <>
struct std::hash<termrank::TermKey> {
  std::size_t operator()(const termrank::TermKey& key) const noexcept {
    return std::hash<std::string>{}(key.str());
  }
};

#endif  // TERMRANK_TYPES_H_
