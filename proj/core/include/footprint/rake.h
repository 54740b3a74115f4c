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

#ifndef FOOTPRINT_RAKE_H_
#define FOOTPRINT_RAKE_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace footprint {

// Rapid Automatic Keyword Extraction.
//
// Candidates are the maximal runs of content words between stopwords,
// phrase delimiters and sentence boundaries. A content word is a word that
// is not a stopword, not purely numeric and at least `min_word_chars` code
// points long; anything else breaks the run. Runs longer than
// `max_phrase_words` are discarded.
//
// Scoring: freq(w) counts occurrences of w across all candidates, deg(w)
// adds (phrase length - 1) for each occurrence plus freq(w). A word scores
// deg(w) / freq(w) and a phrase scores the sum of its word scores.
struct RakeConfig {
  std::unordered_set<std::string> stoplist;
  std::set<char> phrase_delimiters;
  std::size_t min_word_chars = 2;
  std::size_t max_phrase_words = 3;
  double top_fraction = 1.0 / 3.0;

  // Throws ParameterError when an invariant does not hold.
  void validate() const;
};

// Shipped English stoplist, default delimiters and defaults above.
const RakeConfig& default_rake_config();

// Default phrase delimiters: sentence and clause punctuation plus newline.
std::set<char> default_phrase_delimiters();

// One lowercase word per line; blank lines and '#' comments skipped.
std::unordered_set<std::string> parse_stoplist(std::string_view text);
std::unordered_set<std::string> load_stoplist(const std::string& path);

struct ScoredKeyword {
  std::string phrase;
  double score = 0.0;

  bool operator==(const ScoredKeyword&) const = default;
};

// Lowercased candidate phrases (words joined by one space) in text order.
std::vector<std::string> rake_candidates(std::string_view text,
                                         const RakeConfig& cfg);

// Unique phrases sorted by score descending, ties lexicographically
// ascending.
std::vector<ScoredKeyword> rake_scores(const std::vector<std::string>& candidates);

}  // namespace footprint

#endif  // FOOTPRINT_RAKE_H_
