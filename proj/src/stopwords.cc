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

#include "termrank/stopwords.h"

#include <fstream>

#include "termrank/preprocess.h"
#include "termrank/types.h"

namespace termrank {

StopwordList::StopwordList(std::initializer_list<std::string_view> words) {
  for (auto w : words) add(w);
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read stopword file '" + path.string() + "'");
  }
  return from_stream(in);
}

StopwordList StopwordList::from_stream(std::istream& in) {
  StopwordList list;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    list.add(line);
  }
  return list;
}

void StopwordList::add(std::string_view word) {
  std::string cleaned = clean_text(word);
  if (!cleaned.empty()) words_.insert(std::move(cleaned));
}

bool StopwordList::contains(std::string_view lemma) const {
  return words_.find(std::string(lemma)) != words_.end();
}

}  // namespace termrank
