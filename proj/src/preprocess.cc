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

#include "termrank/preprocess.h"

#include <array>
#include <fstream>
#include <utility>

#include "termrank/utf8.h"

namespace termrank {

std::vector<std::string> segment_sentences(std::string_view text) {
  std::vector<std::string> segments;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    bool boundary = i == text.size();
    if (!boundary) {
      switch (text[i]) {
        case '.': case '!': case '?': case ';': case '\n':
          boundary = true;
          break;
        default:
          break;
      }
    }
    if (boundary) {
      if (i > begin) segments.emplace_back(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  return segments;
}

std::string clean_text(std::string_view sentence) {
  std::string out;
  out.reserve(sentence.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < sentence.size()) {
    char32_t cp = utf8::next(sentence, pos);
    if (!utf8::is_letter(cp)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    utf8::append(out, utf8::to_lower(cp));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view cleaned) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    while (i < cleaned.size() && cleaned[i] == ' ') ++i;
    std::size_t begin = i;
    while (i < cleaned.size() && cleaned[i] != ' ') ++i;
    if (i > begin) tokens.emplace_back(cleaned.substr(begin, i - begin));
  }
  return tokens;
}

PosTag suffix_rule_tag(std::string_view word) {
  struct Rule {
    std::string_view suffix;
    PosTag tag;
  };
  static constexpr std::array<Rule, 9> kRules = {{
      {"ly", PosTag::kAdv},
      {"ous", PosTag::kAdj},
      {"al", PosTag::kAdj},
      {"ive", PosTag::kAdj},
      {"ic", PosTag::kAdj},
      {"ing", PosTag::kVerb},
      {"ed", PosTag::kVerb},
      {"ize", PosTag::kVerb},
      {"ise", PosTag::kVerb},
  }};
  for (const auto& rule : kRules) {
    if (word.size() > rule.suffix.size() && word.ends_with(rule.suffix)) {
      return rule.tag;
    }
  }
  return PosTag::kNoun;
}

LexiconAnnotator LexiconAnnotator::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read lexicon file '" + path.string() + "'");
  }
  return from_stream(in);
}

LexiconAnnotator LexiconAnnotator::from_stream(std::istream& in) {
  LexiconAnnotator lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::array<std::string_view, 3> cols;
    std::string_view rest = line;
    for (std::size_t c = 0; c < 3; ++c) {
      auto tab = rest.find('\t');
      if (c < 2 && tab == std::string_view::npos) {
        throw ParseError("lexicon line " + std::to_string(line_no) +
                             ": expected 3 tab-separated columns",
                         line_no);
      }
      cols[c] = rest.substr(0, tab);
      rest = tab == std::string_view::npos ? std::string_view{}
                                           : rest.substr(tab + 1);
    }
    std::string lemma = clean_text(cols[1]);
    if (lemma.empty() || lemma.find(' ') != std::string::npos) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                           ": lemma must be a single word of letters",
                       line_no);
    }
    lexicon.add(cols[0], lemma, pos_from_upos(cols[2]));
  }
  return lexicon;
}

void LexiconAnnotator::add(std::string_view surface, std::string_view lemma,
                           PosTag pos) {
  entries_[clean_text(surface)] = TokenAnnotation{clean_text(lemma), pos};
}

std::vector<TokenAnnotation> LexiconAnnotator::annotate(
    std::span<const std::string> surfaces) const {
  std::vector<TokenAnnotation> out;
  out.reserve(surfaces.size());
  for (const auto& surface : surfaces) {
    auto it = entries_.find(surface);
    if (it != entries_.end()) {
      out.push_back(it->second);
    } else {
      out.push_back(TokenAnnotation{surface, suffix_rule_tag(surface)});
    }
  }
  return out;
}

std::unique_ptr<Annotator> builtin_annotator(
    const std::filesystem::path& lexicon) {
  return std::make_unique<LexiconAnnotator>(LexiconAnnotator::from_file(lexicon));
}

namespace {

// Annotator output must line up with the input and carry clean lemmas.
bool annotate_sentence(const std::vector<std::string>& surfaces,
                       const Annotator& annotator,
                       const StopwordList& stopwords, Sentence& sentence) {
  std::vector<TokenAnnotation> tags;
  try {
    tags = annotator.annotate(surfaces);
  } catch (const std::exception&) {
    return false;
  }
  if (tags.size() != surfaces.size()) return false;
  sentence.clear();
  sentence.reserve(surfaces.size());
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    std::string lemma = clean_text(tags[i].lemma);
    if (lemma.empty() || lemma.find(' ') != std::string::npos) return false;
    bool stop = stopwords.contains(lemma);
    sentence.push_back(
        AnnotatedToken{surfaces[i], std::move(lemma), tags[i].pos, stop});
  }
  return true;
}

}  // namespace

AnnotatedDocument annotate(const Document& document, const Annotator& annotator,
                           const StopwordList& stopwords,
                           AnnotateDiagnostics* diagnostics) {
  AnnotatedDocument out{document.doc_id, {}};
  for (const auto& segment : segment_sentences(document.text)) {
    auto surfaces = tokenize(clean_text(segment));
    if (surfaces.empty()) continue;
    Sentence sentence;
    if (annotate_sentence(surfaces, annotator, stopwords, sentence)) {
      out.sentences.push_back(std::move(sentence));
    } else if (diagnostics) {
      ++diagnostics->dropped_sentences;
    }
  }
  return out;
}

}  // namespace termrank
