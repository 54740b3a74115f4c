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

#ifndef FOOTPRINT_EXTRACTION_H_
#define FOOTPRINT_EXTRACTION_H_

#include <string>
#include <string_view>
#include <vector>

#include "footprint/rake.h"

namespace footprint {

struct HtmlDocument {
  std::string raw;
  std::string base_url;

  // Throws InputError when raw is empty.
  static HtmlDocument make(std::string raw, std::string base_url);
};

enum class KeywordSource { kMeta, kBody };

std::string_view to_string(KeywordSource source);
// Throws FormatError on anything but "meta" / "body".
KeywordSource keyword_source_from_string(std::string_view s);

struct Keyword {
  std::string term;
  KeywordSource source = KeywordSource::kMeta;

  bool operator==(const Keyword&) const = default;
};

// Keywords meta tokens (comma separated) followed by the content words of
// the description meta and the title, lowercased, trimmed and deduplicated
// in document order. Content words use the stoplist of `cfg`.
std::vector<std::string> extract_meta_keywords(const HtmlDocument& doc,
                                               const RakeConfig& cfg);
std::vector<std::string> extract_meta_keywords(const HtmlDocument& doc);

// Meta keywords (tagged kMeta) followed by the top ceil(n * top_fraction)
// RAKE phrases of the visible body text (tagged kBody). Body phrases that
// collide case-insensitively with a meta keyword are dropped.
std::vector<Keyword> extract_keywords(const HtmlDocument& doc,
                                      const RakeConfig& cfg);

// Number of top-ranked phrases kept out of `phrase_count`.
std::size_t top_phrase_count(std::size_t phrase_count, double top_fraction);

}  // namespace footprint

#endif  // FOOTPRINT_EXTRACTION_H_
