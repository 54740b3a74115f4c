// Copyright 2026 The footprint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FOOTPRINT_TEXT_H_
#define FOOTPRINT_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace footprint::text {

// ASCII-only case folding; bytes >= 0x80 pass through untouched.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char delimiter);

// Number of UTF-8 code points (continuation bytes are not counted).
std::size_t utf8_length(std::string_view s);

// Word characters: ASCII letters and digits, '_', '+', '-', '\'' and any
// non-ASCII byte.
bool is_word_byte(unsigned char c);

bool is_numeric(std::string_view word);

// Splits on runs of non-word bytes, trimming leading/trailing '-' and '\''
// from each word. Words are returned as views into `s`.
std::vector<std::string_view> words(std::string_view s);

bool iequals(std::string_view a, std::string_view b);

}  // namespace footprint::text

#endif  // FOOTPRINT_TEXT_H_
