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

#ifndef TERMRANK_UTF8_H_
#define TERMRANK_UTF8_H_

#include <string>
#include <string_view>

namespace termrank::utf8 {

bool is_valid(std::string_view text);

// Unicode general category L*.
bool is_letter(char32_t cp);

// Simple (single code point) lowercase mapping.
char32_t to_lower(char32_t cp);

// Decodes the code point at `pos` and advances past it. Ill-formed
// sequences decode to U+FFFD.
char32_t next(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t cp);

}  // namespace termrank::utf8

#endif  // TERMRANK_UTF8_H_
