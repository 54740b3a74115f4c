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

#include "footprint/extraction.h"

#include <cmath>
#include <unordered_set>

#include "footprint/errors.h"
#include "footprint/html.h"
#include "footprint/text.h"

namespace footprint {
namespace {

// Lowercases, trims and collapses inner whitespace runs to one space.
std::string normalize_term(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  for (char c : text::trim(raw)) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return text::to_lower(out);
}

class OrderedTerms {
 public:
  void add(std::string term) {
    if (term.empty()) return;
    if (seen_.insert(term).second) terms_.push_back(std::move(term));
  }
  std::vector<std::string> take() { return std::move(terms_); }

 private:
  std::vector<std::string> terms_;
  std::unordered_set<std::string> seen_;
};

void add_content_words(OrderedTerms& out, std::string_view content,
                       const RakeConfig& cfg) {
  const std::string lowered = text::to_lower(content);
  for (std::string_view w : text::words(lowered)) {
    if (text::utf8_length(w) < cfg.min_word_chars || text::is_numeric(w) ||
        cfg.stoplist.contains(std::string(w))) {
      continue;
    }
    out.add(std::string(w));
  }
}

}  // namespace

HtmlDocument HtmlDocument::make(std::string raw, std::string base_url) {
  if (raw.empty()) throw InputError("HTML document is empty");
  return HtmlDocument{std::move(raw), std::move(base_url)};
}

std::string_view to_string(KeywordSource source) {
  return source == KeywordSource::kMeta ? "meta" : "body";
}

KeywordSource keyword_source_from_string(std::string_view s) {
  if (s == "meta") return KeywordSource::kMeta;
  if (s == "body") return KeywordSource::kBody;
  throw FormatError("unknown keyword source '" + std::string(s) + "'");
}

std::vector<std::string> extract_meta_keywords(const HtmlDocument& doc,
                                               const RakeConfig& cfg) {
  const html::PageMeta meta = html::extract_meta(doc.raw);
  OrderedTerms terms;
  for (const std::string& content : meta.keywords_content) {
    const std::string decoded = html::decode_entities(content);
    for (std::string_view token : text::split(decoded, ',')) {
      terms.add(normalize_term(token));
    }
  }
  for (const std::string& content : meta.description_content) {
    add_content_words(terms, content, cfg);
  }
  add_content_words(terms, meta.title, cfg);
  return terms.take();
}

std::vector<std::string> extract_meta_keywords(const HtmlDocument& doc) {
  return extract_meta_keywords(doc, default_rake_config());
}

std::size_t top_phrase_count(std::size_t phrase_count, double top_fraction) {
  if (phrase_count == 0) return 0;
  const double wanted = std::ceil(static_cast<double>(phrase_count) * top_fraction - 1e-9);
  return std::min(phrase_count, std::max<std::size_t>(1, static_cast<std::size_t>(wanted)));
}

std::vector<Keyword> extract_keywords(const HtmlDocument& doc, const RakeConfig& cfg) {
  std::vector<Keyword> out;
  std::unordered_set<std::string> seen;
  for (std::string& term : extract_meta_keywords(doc, cfg)) {
    seen.insert(text::to_lower(term));
    out.push_back({std::move(term), KeywordSource::kMeta});
  }

  const auto scored = rake_scores(rake_candidates(html::visible_text(doc.raw), cfg));
  const std::size_t keep = top_phrase_count(scored.size(), cfg.top_fraction);
  for (std::size_t i = 0; i < keep; ++i) {
    if (seen.insert(text::to_lower(scored[i].phrase)).second) {
      out.push_back({scored[i].phrase, KeywordSource::kBody});
    }
  }
  return out;
}

}  // namespace footprint
