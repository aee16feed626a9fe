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

#include "termrank/filters.h"

#include <fstream>
#include <memory>
#include <utility>

namespace termrank {

namespace {

struct Node {
  enum Kind { kTag, kSeq, kPlus, kStar } kind = kSeq;
  PosTag tag = PosTag::kOther;
  std::vector<Node> children;
};

class Parser {
 public:
  explicit Parser(std::string_view spec) : spec_(spec) {}

  Node parse() {
    skip_space();
    if (pos_ == spec_.size()) fail("empty pattern", 0);
    Node root = parse_seq();
    if (pos_ < spec_.size()) fail("unexpected ')'", pos_);
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& why, std::size_t at) {
    throw ParseError("filter pattern '" + std::string(spec_) + "': " + why +
                         " at offset " + std::to_string(at),
                     at);
  }

  void skip_space() {
    while (pos_ < spec_.size() && (spec_[pos_] == ' ' || spec_[pos_] == '\t')) {
      ++pos_;
    }
  }

  Node parse_seq() {
    Node seq{Node::kSeq, PosTag::kOther, {}};
    while (true) {
      skip_space();
      if (pos_ == spec_.size() || spec_[pos_] == ')') return seq;
      seq.children.push_back(parse_item());
    }
  }

  Node parse_item() {
    Node item;
    const std::size_t at = pos_;
    const char c = spec_[pos_];
    switch (c) {
      case 'N': item = {Node::kTag, PosTag::kNoun, {}}; ++pos_; break;
      case 'A': item = {Node::kTag, PosTag::kAdj, {}}; ++pos_; break;
      case 'R': item = {Node::kTag, PosTag::kAdv, {}}; ++pos_; break;
      case 'V': item = {Node::kTag, PosTag::kVerb, {}}; ++pos_; break;
      case '(': {
        ++pos_;
        item = parse_seq();
        if (pos_ == spec_.size()) fail("unclosed '('", at);
        if (item.children.empty()) fail("empty group", at);
        ++pos_;  // ')'
        break;
      }
      case '+':
      case '*':
        fail(std::string("quantifier '") + c + "' without operand", at);
      default:
        fail(std::string("unexpected character '") + c + "'", at);
    }
    if (pos_ < spec_.size() && (spec_[pos_] == '+' || spec_[pos_] == '*')) {
      Node wrapped{spec_[pos_] == '+' ? Node::kPlus : Node::kStar,
                   PosTag::kOther,
                   {std::move(item)}};
      ++pos_;
      return wrapped;
    }
    return item;
  }

  std::string_view spec_;
  std::size_t pos_ = 0;
};

}  // namespace

// Compiles the AST back to front: each node is built knowing the state its
// matches continue to.
class PatternBuilder {
 public:
  explicit PatternBuilder(PosPattern& pattern) : p_(pattern) {}

  int add(PosPattern::State state) {
    p_.states_.push_back(state);
    return static_cast<int>(p_.states_.size() - 1);
  }

  int build(const Node& node, int next) {
    switch (node.kind) {
      case Node::kTag:
        return add({PosPattern::State::kTag, node.tag, next, -1});
      case Node::kSeq: {
        int entry = next;
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
          entry = build(*it, entry);
        }
        if (entry == next) entry = add({PosPattern::State::kEpsilon, {}, next, -1});
        return entry;
      }
      case Node::kPlus:
      case Node::kStar: {
        int loop = add({PosPattern::State::kEpsilon, {}, -1, next});
        int body = build(node.children.front(), loop);
        p_.states_[loop].next = body;
        return node.kind == Node::kPlus ? body : loop;
      }
    }
    return next;
  }

 private:
  PosPattern& p_;
};

PosPattern PosPattern::compile(std::string_view spec) {
  Node root = Parser(spec).parse();
  PosPattern pattern;
  PatternBuilder builder(pattern);
  pattern.accept_ = builder.add({State::kAccept, {}, -1, -1});
  pattern.start_ = builder.build(root, pattern.accept_);
  return pattern;
}

void PosPattern::closure(std::vector<int>& set, std::vector<char>& seen) const {
  std::vector<int> stack;
  stack.swap(set);
  for (int s : stack) seen[s] = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    set.push_back(s);
    const State& st = states_[s];
    if (st.kind != State::kEpsilon) continue;
    for (int t : {st.next, st.alt}) {
      if (t >= 0 && !seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
}

bool PosPattern::matches(std::span<const PosTag> tags) const {
  if (tags.empty()) {
    std::vector<int> set{start_};
    std::vector<char> seen(states_.size(), 0);
    closure(set, seen);
    return seen[accept_];
  }
  bool full = false;
  for_each_prefix_match(tags, [&](std::size_t len) {
    if (len == tags.size()) full = true;
  });
  return full;
}

LinguisticFilter compile_filter(int id, std::string_view spec) {
  return LinguisticFilter{id, std::string(spec), PosPattern::compile(spec)};
}

std::vector<LinguisticFilter> builtin_filters() {
  static const char* const kSpecs[] = {
      "N N+", "A+ N+", "N A+ (N A+)*", "N+ R+ N*", "N V+ R* A*",
  };
  std::vector<LinguisticFilter> filters;
  for (int i = 0; i < 5; ++i) filters.push_back(compile_filter(i + 1, kSpecs[i]));
  return filters;
}

std::vector<LinguisticFilter> load_filter_file(const std::filesystem::path& path,
                                               int first_id) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read filter file '" + path.string() + "'");
  std::vector<LinguisticFilter> filters;
  std::string line;
  int id = first_id;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') {
      continue;
    }
    filters.push_back(compile_filter(id++, line));
  }
  return filters;
}

std::vector<SpanMatch> match_spans(std::span<const PosTag> tags,
                                   std::span<const LinguisticFilter> filters) {
  std::vector<SpanMatch> spans;
  // best[len] = lowest filter id matching [start, start + len).
  std::vector<int> best(tags.size() + 1);
  for (std::size_t start = 0; start + 1 < tags.size(); ++start) {
    std::fill(best.begin(), best.end(), 0);
    auto rest = tags.subspan(start);
    for (const auto& filter : filters) {
      filter.pattern.for_each_prefix_match(rest, [&](std::size_t len) {
        if (len >= 2 && (best[len] == 0 || filter.id < best[len])) {
          best[len] = filter.id;
        }
      });
    }
    for (std::size_t len = 2; len <= rest.size(); ++len) {
      if (best[len] != 0) spans.push_back({start, len, best[len]});
    }
  }
  return spans;
}

std::vector<std::size_t> content_positions(const Sentence& sentence) {
  std::vector<std::size_t> positions;
  positions.reserve(sentence.size());
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    if (!sentence[i].is_stopword) positions.push_back(i);
  }
  return positions;
}

std::vector<CandidateOccurrence> extract_candidates(
    const Sentence& sentence, std::span<const LinguisticFilter> filters,
    std::string_view doc_id, std::size_t sentence_index) {
  auto positions = content_positions(sentence);
  std::vector<PosTag> tags;
  tags.reserve(positions.size());
  for (auto p : positions) tags.push_back(sentence[p].pos);

  std::vector<CandidateOccurrence> out;
  for (const auto& span : match_spans(tags, filters)) {
    CandidateOccurrence occ;
    occ.lemmas.reserve(span.length);
    for (std::size_t i = 0; i < span.length; ++i) {
      occ.lemmas.push_back(sentence[positions[span.start + i]].lemma);
    }
    occ.filter_id = span.filter_id;
    occ.doc_id = std::string(doc_id);
    occ.sentence_index = sentence_index;
    occ.start = span.start;
    occ.length = span.length;
    out.push_back(std::move(occ));
  }
  return out;
}

}  // namespace termrank
