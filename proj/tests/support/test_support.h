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

// Shared helpers for the unit and acceptance tests: fixture access,
// hand-rolled random generators and brute-force oracles that recompute
// library results from their definitions.

#ifndef FOOTPRINT_TESTS_TEST_SUPPORT_H_
#define FOOTPRINT_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "footprint/profile.h"
#include "footprint/rake.h"
#include "footprint/simulator.h"

namespace footprint::testing {

inline std::string fixture_path(std::string_view relative) {
  return std::string(FOOTPRINT_FIXTURE_DIR) + "/" + std::string(relative);
}

inline std::string data_path(std::string_view relative) {
  return std::string(FOOTPRINT_DATA_DIR) + "/" + std::string(relative);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_fixture(std::string_view relative) {
  return read_file(fixture_path(relative));
}

// Non-empty lines that are not '#' comments.
inline std::vector<std::string> fixture_lines(std::string_view relative) {
  std::istringstream in(read_fixture(relative));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

inline std::vector<std::string> split_spaces(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Small deterministic generator; every property test seeds its own.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
  }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(below(hi - lo + 1));
  }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  bool chance(double p) { return unit() < p; }

  // Random PMF of length L. Some draws are point masses or have zeros so
  // that edge cases show up regularly.
  std::vector<double> pmf(std::size_t L) {
    std::vector<double> w(L, 0.0);
    const auto shape = below(4);
    if (shape == 0) {
      w[below(L)] = 1.0;
    } else {
      for (double& x : w) x = (shape == 1 && chance(0.5)) ? 0.0 : unit();
      w[below(L)] += 0.5;
    }
    double sum = 0.0;
    for (double x : w) sum += x;
    for (double& x : w) x /= sum;
    return w;
  }

  Profile profile(std::size_t L) {
    return Profile{pmf(L), static_cast<std::int64_t>(between(1, 1000))};
  }

  // Count vector of length L; about one in ten is all zeros.
  CategoryCounts counts(std::size_t L, std::int64_t max_count = 1000) {
    CategoryCounts c(L);
    if (chance(0.1)) return c;
    for (auto& x : c.counts) {
      x = chance(0.3) ? 0 : static_cast<std::int64_t>(below(max_count + 1));
    }
    return c;
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 rng_;
};

// Random prose of at most `max_words` words built from content words,
// stopwords, numbers and punctuation so that every splitting rule fires.
inline std::string random_text(Gen& gen, std::size_t max_words) {
  static const std::vector<std::string> content = {
      "cycling", "mountain", "trails", "alpine", "touring", "bikes",
      "carbon", "frames", "opera", "jazz", "museum", "gallery",
      "Gardening", "Soil", "compost", "harvest", "physics", "quantum",
      "league", "final", "x", "q", "café", "naïve", "sold-out",
      "it's", "data", "model"};
  static const std::vector<std::string> stop = {
      "the", "a", "and", "of", "with", "many", "every", "on",
      "is", "are", "The", "AND", "into", "from"};
  static const std::vector<std::string> punct = {
      ".", ",", ";", ":", "!", "?", "(", ")", "\"", "\n", " |", " -"};
  std::string out;
  const std::size_t n = gen.between(0, max_words);
  for (std::size_t i = 0; i < n; ++i) {
    const auto kind = gen.below(10);
    std::string word;
    if (kind < 6) {
      word = gen.pick(content);
    } else if (kind < 9) {
      word = gen.pick(stop);
    } else {
      word = std::to_string(gen.below(3000));
    }
    if (!out.empty()) out += ' ';
    out += word;
    if (gen.chance(0.15)) out += gen.pick(punct);
  }
  return out;
}

// deg/freq scoring written straight from its definition: quadratic scans,
// no hashing, independent sort.
inline std::vector<ScoredKeyword> brute_rake_scores(
    const std::vector<std::string>& candidates) {
  std::vector<std::vector<std::string>> phrases;
  for (const auto& c : candidates) phrases.push_back(split_spaces(c));

  auto word_score = [&](const std::string& w) {
    std::int64_t freq = 0;
    std::int64_t deg = 0;
    for (const auto& p : phrases) {
      for (const auto& x : p) {
        if (x == w) {
          ++freq;
          deg += static_cast<std::int64_t>(p.size());
        }
      }
    }
    return static_cast<double>(deg) / static_cast<double>(freq);
  };

  std::vector<ScoredKeyword> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool seen = false;
    for (const auto& k : out) seen = seen || k.phrase == candidates[i];
    if (seen) continue;
    double score = 0.0;
    for (const auto& w : phrases[i]) score += word_score(w);
    out.push_back({candidates[i], score});
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const bool better = out[j].score > out[best].score ||
                          (out[j].score == out[best].score && out[j].phrase < out[best].phrase);
      if (better) best = j;
    }
    std::swap(out[i], out[best]);
  }
  return out;
}

inline double brute_l1(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
  return s;
}

inline double brute_l2(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

inline double brute_kl(const std::vector<double>& p, const std::vector<double>& q,
                       double epsilon) {
  double norm = 0.0;
  for (double x : q) norm += x + epsilon;
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    s += p[i] * std::log(p[i] / ((q[i] + epsilon) / norm)) / std::log(2.0);
  }
  return s;
}

// Terms the shipped demo taxonomy maps to `category`, in file order.
inline std::vector<std::string> demo_terms(std::string_view category) {
  std::istringstream in(read_file(data_path("demo_taxonomy.tsv")));
  std::vector<std::string> terms;
  for (std::string line; std::getline(in, line);) {
    const auto tab = line.find('\t');
    if (line.empty() || line[0] == '#' || tab == std::string::npos) continue;
    const std::string term = line.substr(0, tab);
    if (term != "category" && line.substr(tab + 1) == category) terms.push_back(term);
  }
  return terms;
}

// Synthetic reading list: step i visits a page whose meta keywords are
// `per_page` consecutive terms (rotating) of categories[i].
inline SessionScript synthetic_script(const std::vector<std::string>& categories,
                                      std::size_t per_page = 20, double dwell = 15) {
  SessionScript script;
  script.identity = {"synthetic", "Synthetic reader"};
  for (std::size_t i = 0; i < categories.size(); ++i) {
    const auto terms = demo_terms(categories[i]);
    std::string keywords;
    for (std::size_t k = 0; k < per_page; ++k) {
      if (k > 0) keywords += ", ";
      keywords += terms[(i + k) % terms.size()];
    }
    SessionStep step;
    step.url = "https://site" + std::to_string(i + 1) + ".example/page";
    step.dwell = dwell;
    step.source = {PageSource::Kind::kInline,
                   "<html><head><meta name=\"keywords\" content=\"" + keywords +
                       "\"></head><body></body></html>"};
    script.steps.push_back(std::move(step));
  }
  return script;
}

}  // namespace footprint::testing

#endif  // FOOTPRINT_TESTS_TEST_SUPPORT_H_
