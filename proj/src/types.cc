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

#include "termrank/types.h"

#include <array>
#include <utility>

namespace termrank {

namespace {

struct UposEntry {
  std::string_view name;
  PosTag tag;
};

constexpr std::array<UposEntry, 17> kUposTable = {{
    {"ADJ", PosTag::kAdj},     {"ADP", PosTag::kOther},
    {"ADV", PosTag::kAdv},     {"AUX", PosTag::kVerb},
    {"CCONJ", PosTag::kOther}, {"DET", PosTag::kOther},
    {"INTJ", PosTag::kOther},  {"NOUN", PosTag::kNoun},
    {"NUM", PosTag::kOther},   {"PART", PosTag::kOther},
    {"PRON", PosTag::kOther},  {"PROPN", PosTag::kNoun},
    {"PUNCT", PosTag::kOther}, {"SCONJ", PosTag::kOther},
    {"SYM", PosTag::kOther},   {"VERB", PosTag::kVerb},
    {"X", PosTag::kOther},
}};

}  // namespace

PosTag pos_from_upos(std::string_view upos, bool* known) {
  for (const auto& entry : kUposTable) {
    if (entry.name == upos) {
      if (known) *known = true;
      return entry.tag;
    }
  }
  if (known) *known = false;
  return PosTag::kOther;
}

std::string_view to_upos(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "NOUN";
    case PosTag::kAdj: return "ADJ";
    case PosTag::kAdv: return "ADV";
    case PosTag::kVerb: return "VERB";
    case PosTag::kOther: break;
  }
  return "X";
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find(' ', begin);
    if (end == std::string_view::npos) end = text.size();
    words.emplace_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return words;
}

std::string join_words(std::span<const std::string> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += words[i];
  }
  return out;
}

TermKey::TermKey(std::span<const std::string> lemmas)
    : canonical_(join_words(lemmas)), length_(lemmas.size()) {}

TermKey TermKey::from_canonical(std::string_view canonical) {
  auto words = split_words(canonical);
  if (words.size() < 2) {
    throw ParseError("term '" + std::string(canonical) +
                         "' must contain at least two words",
                     0);
  }
  std::size_t offset = 0;
  for (const auto& w : words) {
    if (w.empty()) {
      throw ParseError("term '" + std::string(canonical) +
                           "' is not in canonical form",
                       offset);
    }
    offset += w.size() + 1;
  }
  return TermKey(words);
}

std::vector<std::string> TermKey::words() const {
  return split_words(canonical_);
}

}  // namespace termrank
