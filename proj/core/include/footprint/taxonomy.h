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

#ifndef FOOTPRINT_TAXONOMY_H_
#define FOOTPRINT_TAXONOMY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace footprint {

using CategoryId = std::size_t;

// Fixed-length histogram of keyword counts over the taxonomy categories.
struct CategoryCounts {
  std::vector<std::int64_t> counts;

  CategoryCounts() = default;
  explicit CategoryCounts(std::size_t categories) : counts(categories, 0) {}
  explicit CategoryCounts(std::vector<std::int64_t> values)
      : counts(std::move(values)) {}

  std::size_t size() const { return counts.size(); }
  std::int64_t total() const;

  bool operator==(const CategoryCounts&) const = default;
};

// Mapping from lowercase terms to top-level interest categories. Immutable
// after construction.
//
// File format (UTF-8 TSV, '#' comments and blank lines ignored):
//   category<TAB>Arts            one line per category, defines the order
//   category<TAB>Sports
//   cycling<TAB>Sports           then term<TAB>category-name lines
class Taxonomy {
 public:
  // Throws FormatError: no categories, duplicate category names, a term
  // mapped to two categories (the message names the term), unknown
  // category, or a malformed line.
  static Taxonomy parse(std::string_view tsv);
  // Throws InputError naming the path when the file cannot be read.
  static Taxonomy load(const std::string& path);
  // The 13-category demo taxonomy shipped with the library.
  static const Taxonomy& demo();

  std::size_t size() const { return categories_.size(); }
  const std::vector<std::string>& categories() const { return categories_; }
  const std::string& name(CategoryId id) const { return categories_.at(id); }
  std::optional<CategoryId> category_id(std::string_view name) const;

  // Exact lookup of an already lowercased term.
  std::optional<CategoryId> find(std::string_view term) const;

  // First term listed for each category, nullopt for categories without
  // any term.
  const std::vector<std::optional<std::string>>& representatives() const {
    return representatives_;
  }

  std::size_t term_count() const { return index_.size(); }

 private:
  std::vector<std::string> categories_;
  std::unordered_map<std::string, CategoryId> index_;
  std::vector<std::optional<std::string>> representatives_;
};

// Case-insensitive. Exact match of the whole term first; otherwise, for a
// multi-word term, each word votes for its category and the majority wins
// with ties going to the lowest category id.
std::optional<CategoryId> classify(std::string_view term, const Taxonomy& tax);

struct Classification {
  CategoryCounts counts;
  std::size_t dropped = 0;
  std::vector<std::string> unclassified;  // in input order
};

Classification classify_all(const std::vector<std::string>& terms,
                            const Taxonomy& tax);

}  // namespace footprint

#endif  // FOOTPRINT_TAXONOMY_H_
