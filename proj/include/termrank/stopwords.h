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

#ifndef TERMRANK_STOPWORDS_H_
#define TERMRANK_STOPWORDS_H_

#include <filesystem>
#include <initializer_list>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>

namespace termrank {

// Set of lowercase function words. Tokens are flagged by lemma membership.
class StopwordList {
 public:
  StopwordList() = default;
  StopwordList(std::initializer_list<std::string_view> words);

  // One word per line; blank lines and lines starting with '#' are skipped.
  // Entries are lowercased. Throws ConfigError if the file cannot be read.
  static StopwordList from_file(const std::filesystem::path& path);
  static StopwordList from_stream(std::istream& in);

  void add(std::string_view word);
  bool contains(std::string_view lemma) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

}  // namespace termrank

#endif  // TERMRANK_STOPWORDS_H_
