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

#ifndef FOOTPRINT_HTML_H_
#define FOOTPRINT_HTML_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace footprint::html {

struct Tag {
  std::string name;  // lowercase
  std::vector<std::pair<std::string, std::string>> attributes;
  bool closing = false;
  bool self_closing = false;

  // Value of the first attribute named `name` (lowercase), or nullptr.
  const std::string* attribute(std::string_view name) const;
};

// Tolerant single-pass scanner. Malformed markup never fails; unterminated
// constructs are consumed to the end of input.
class Scanner {
 public:
  explicit Scanner(std::string_view html) : html_(html) {}

  enum class Kind { kText, kTag, kEnd };

  struct Token {
    Kind kind = Kind::kEnd;
    std::string_view text;  // raw text for kText
    Tag tag;                // for kTag
  };

  Token next();

  // Consumes raw text up to the closing tag of `name` (used for script,
  // style and friends) and returns it.
  std::string_view skip_raw_text(std::string_view name);

 private:
  std::string_view html_;
  std::size_t pos_ = 0;
};

std::string decode_entities(std::string_view s);

struct PageMeta {
  std::string title;
  std::vector<std::string> keywords_content;  // one per keywords meta tag
  std::vector<std::string> description_content;
  std::string base_href;
};

PageMeta extract_meta(std::string_view html);

// Visible text with script, style, noscript, template, nav and head
// elements removed, tags stripped and entities decoded. Block-level tag
// boundaries become '\n'; other whitespace runs collapse to one space.
std::string visible_text(std::string_view html);

// src/href values of img, script, iframe and link tags in document order,
// unresolved.
std::vector<std::string> subresource_references(std::string_view html);

}  // namespace footprint::html

#endif  // FOOTPRINT_HTML_H_
