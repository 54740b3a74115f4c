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

#include "footprint/rake.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "footprint/data.h"
#include "footprint/errors.h"
#include "footprint/text.h"

namespace footprint {
namespace {

bool is_sentence_boundary(char c) {
  return c == '.' || c == '!' || c == '?' || c == '\n';
}

bool is_content_word(std::string_view word, const RakeConfig& cfg) {
  if (text::utf8_length(word) < cfg.min_word_chars) return false;
  if (text::is_numeric(word)) return false;
  return !cfg.stoplist.contains(std::string(word));
}

std::string join(const std::vector<std::string_view>& run) {
  std::string phrase;
  for (std::string_view w : run) {
    if (!phrase.empty()) phrase.push_back(' ');
    phrase.append(w);
  }
  return phrase;
}

}  // namespace

void RakeConfig::validate() const {
  if (stoplist.empty()) throw ParameterError("RAKE stoplist must not be empty");
  if (min_word_chars < 1) throw ParameterError("min_word_chars must be >= 1");
  if (max_phrase_words < 1) throw ParameterError("max_phrase_words must be >= 1");
  if (!(top_fraction > 0.0 && top_fraction <= 1.0)) {
    throw ParameterError("top_fraction must be in (0, 1]");
  }
}

std::set<char> default_phrase_delimiters() {
  return {'.', ',', ';', ':', '!', '?', '(', ')', '[', ']',
          '{', '}', '"', '\n', '\t', '|'};
}

std::unordered_set<std::string> parse_stoplist(std::string_view text) {
  std::unordered_set<std::string> words;
  for (std::string_view line : text::split(text, '\n')) {
    const auto hash = line.find('#');
    line = text::trim(line.substr(0, hash));
    if (!line.empty()) words.insert(text::to_lower(line));
  }
  return words;
}

std::unordered_set<std::string> load_stoplist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open stoplist '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_stoplist(ss.str());
}

const RakeConfig& default_rake_config() {
  static const RakeConfig cfg = [] {
    RakeConfig c;
    c.stoplist = parse_stoplist(data::default_stoplist());
    c.phrase_delimiters = default_phrase_delimiters();
    return c;
  }();
  return cfg;
}

std::vector<std::string> rake_candidates(std::string_view input, const RakeConfig& cfg) {
  const std::string lowered = text::to_lower(input);
  std::vector<std::string> candidates;
  std::vector<std::string_view> run;

  auto flush = [&] {
    if (!run.empty() && run.size() <= cfg.max_phrase_words) {
      candidates.push_back(join(run));
    }
    run.clear();
  };

  const std::string_view all(lowered);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= all.size(); ++i) {
    const bool boundary = i == all.size() || is_sentence_boundary(all[i]) ||
                          cfg.phrase_delimiters.contains(all[i]);
    if (!boundary) continue;
    for (std::string_view word : text::words(all.substr(start, i - start))) {
      if (is_content_word(word, cfg)) {
        run.push_back(word);
      } else {
        flush();
      }
    }
    flush();
    start = i + 1;
  }
  return candidates;
}

std::vector<ScoredKeyword> rake_scores(const std::vector<std::string>& candidates) {
  struct WordStats {
    std::int64_t freq = 0;
    std::int64_t degree = 0;
  };
  std::unordered_map<std::string_view, WordStats> stats;
  std::vector<std::vector<std::string_view>> split_candidates;
  split_candidates.reserve(candidates.size());

  for (const std::string& phrase : candidates) {
    auto words = text::split(phrase, ' ');
    const auto extra = static_cast<std::int64_t>(words.size()) - 1;
    for (std::string_view w : words) {
      auto& s = stats[w];
      ++s.freq;
      s.degree += extra;
    }
    split_candidates.push_back(std::move(words));
  }

  std::unordered_map<std::string_view, double> word_score;
  for (const auto& [word, s] : stats) {
    word_score[word] = static_cast<double>(s.degree + s.freq) / static_cast<double>(s.freq);
  }

  std::vector<ScoredKeyword> scored;
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!seen.insert(candidates[i]).second) continue;
    double score = 0.0;
    for (std::string_view w : split_candidates[i]) score += word_score[w];
    scored.push_back({candidates[i], score});
  }
  std::sort(scored.begin(), scored.end(), [](const ScoredKeyword& a, const ScoredKeyword& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.phrase < b.phrase;
  });
  return scored;
}

}  // namespace footprint
