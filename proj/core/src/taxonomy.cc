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

#include "footprint/taxonomy.h"

#include <fstream>
#include <numeric>
#include <sstream>

#include "footprint/data.h"
#include "footprint/errors.h"
#include "footprint/text.h"

namespace footprint {
namespace {

std::vector<std::string_view> whitespace_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && !(s[j] == ' ' || s[j] == '\t' || s[j] == '\n' || s[j] == '\r')) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string normalize(std::string_view term) {
  std::string out;
  for (std::string_view w : whitespace_words(term)) {
    if (!out.empty()) out.push_back(' ');
    out.append(w);
  }
  return text::to_lower(out);
}

}  // namespace

std::int64_t CategoryCounts::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

Taxonomy Taxonomy::parse(std::string_view tsv) {
  Taxonomy tax;
  bool in_terms = false;
  std::size_t line_no = 0;
  for (std::string_view line : text::split(tsv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.starts_with('#')) continue;

    const auto fields = text::split(line, '\t');
    if (fields.size() != 2 || text::trim(fields[0]).empty() || text::trim(fields[1]).empty()) {
      throw FormatError("taxonomy line " + std::to_string(line_no) +
                        ": expected two tab-separated fields");
    }
    const std::string_view key = text::trim(fields[0]);
    const std::string value(text::trim(fields[1]));

    if (key == "category" && !in_terms) {
      if (tax.category_id(value)) {
        throw FormatError("taxonomy line " + std::to_string(line_no) +
                          ": duplicate category '" + value + "'");
      }
      tax.categories_.push_back(value);
      tax.representatives_.emplace_back();
      continue;
    }
    in_terms = true;
    if (tax.categories_.empty()) {
      throw FormatError("taxonomy defines no categories before its first term");
    }
    const auto id = tax.category_id(value);
    if (!id) {
      throw FormatError("taxonomy line " + std::to_string(line_no) + ": term '" +
                        std::string(key) + "' references unknown category '" + value + "'");
    }
    std::string term = normalize(key);
    const auto [it, inserted] = tax.index_.emplace(term, *id);
    if (!inserted && it->second != *id) {
      throw FormatError("taxonomy term '" + term + "' is mapped to both '" +
                        tax.categories_[it->second] + "' and '" + value + "'");
    }
    if (!tax.representatives_[*id]) tax.representatives_[*id] = term;
  }
  if (tax.categories_.empty()) throw FormatError("taxonomy defines no categories");
  return tax;
}

Taxonomy Taxonomy::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open taxonomy file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Taxonomy& Taxonomy::demo() {
  static const Taxonomy tax = parse(data::demo_taxonomy());
  return tax;
}

std::optional<CategoryId> Taxonomy::category_id(std::string_view name) const {
  for (CategoryId i = 0; i < categories_.size(); ++i) {
    if (categories_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<CategoryId> Taxonomy::find(std::string_view term) const {
  const auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<CategoryId> classify(std::string_view term, const Taxonomy& tax) {
  const std::string key = normalize(term);
  if (key.empty()) return std::nullopt;
  if (auto hit = tax.find(key)) return hit;

  const auto words = whitespace_words(key);
  if (words.size() < 2) return std::nullopt;
  std::vector<std::size_t> votes(tax.size(), 0);
  bool any = false;
  for (std::string_view w : words) {
    if (auto id = tax.find(w)) {
      ++votes[*id];
      any = true;
    }
  }
  if (!any) return std::nullopt;
  CategoryId best = 0;
  for (CategoryId c = 1; c < votes.size(); ++c) {
    if (votes[c] > votes[best]) best = c;
  }
  return best;
}

Classification classify_all(const std::vector<std::string>& terms, const Taxonomy& tax) {
  Classification result;
  result.counts = CategoryCounts(tax.size());
  for (const std::string& term : terms) {
    if (auto id = classify(term, tax)) {
      ++result.counts.counts[*id];
    } else {
      ++result.dropped;
      result.unclassified.push_back(term);
    }
  }
  return result;
}

}  // namespace footprint
