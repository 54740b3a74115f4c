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

#ifndef FOOTPRINT_SIMULATOR_H_
#define FOOTPRINT_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "footprint/ad_extractor.h"
#include "footprint/event_model.h"
#include "footprint/fetch.h"
#include "footprint/metrics.h"
#include "footprint/rake.h"
#include "footprint/series_io.h"
#include "footprint/taxonomy.h"
#include "footprint/time.h"

namespace footprint {

// ---------------------------------------------------------------------------
// Session scripts
// ---------------------------------------------------------------------------

struct PageSource {
  enum class Kind { kInline, kSnapshot, kFetched };

  Kind kind = Kind::kInline;
  std::string content;  // HTML for kInline, relative path for kSnapshot

  bool operator==(const PageSource&) const = default;
};

struct SessionStep {
  std::string url;
  double dwell = 0.0;
  PageSource source;

  bool operator==(const SessionStep&) const = default;
};

// A reading list replayed in order by the surfing agent.
//
// JSON form:
//   {"identity": {"id": "u1", "label": "..."},
//    "start": "2024-01-01T00:00:00Z",          (optional)
//    "steps": [{"url": "...", "dwell": 15,
//               "html": "..."                  inline page, or
//               "snapshot": "pages/a.html"     path relative to the script, or
//               "fetch": true}]}               live fetch
struct SessionScript {
  Identity identity;
  Timestamp start = Timestamp::from_seconds(1704067200);  // 2024-01-01
  std::vector<SessionStep> steps;
  std::string base_dir;  // snapshot paths resolve against this

  // Throws InputError when there are no steps, a dwell is negative or a
  // step URL is not absolute.
  void validate() const;

  static SessionScript parse_json(std::string_view json,
                                  std::string base_dir = ".");
  static SessionScript load(const std::string& path);
  std::string to_json() const;
};

// Logical visit timestamps: start, then each step advances by its dwell
// rounded up to whole seconds, at least one second.
std::vector<Timestamp> step_timestamps(const SessionScript& script);

// ---------------------------------------------------------------------------
// Mock ad server
// ---------------------------------------------------------------------------

enum class ServeMode {
  // ads_per_visit categories drawn i.i.d. from the normalized estimate.
  kSampled,
  // Deterministic: the served ads carry exactly the counts released into
  // the estimate at this visit, so the pooled served ads reproduce the
  // estimate's proportions. Both modes serve a uniform spread when the
  // estimate is empty (one ad per category in this mode).
  kExpected,
};

std::string_view to_string(ServeMode mode);
ServeMode serve_mode_from_string(std::string_view s);

struct MockAdServerOptions {
  std::size_t ads_per_visit = 10;
  std::size_t lag = 0;  // visits before observed counts affect serving
  std::uint64_t seed = 0;
  ServeMode mode = ServeMode::kSampled;
};

// Offline stand-in for the ad network: keeps a running count estimate of
// the user's interests and serves ads whose topical token is the
// representative term of a category.
class MockAdServer {
 public:
  static constexpr std::string_view kHost = "ads.adnet.example";

  // Throws InputError if ads_per_visit is 0 or a category has no term to
  // use as its representative token.
  MockAdServer(const Taxonomy& tax, MockAdServerOptions options);

  const CategoryCounts& estimate() const { return estimate_; }
  // Counts released into the estimate by the latest observation.
  const CategoryCounts& released() const { return released_; }
  std::size_t visits_observed() const { return visits_; }
  const MockAdServerOptions& options() const { return options_; }
  const std::vector<std::string>& representatives() const {
    return representatives_;
  }

  // Request URL carrying one served ad token.
  std::string ad_url(std::string_view token, std::size_t visit,
                     std::size_t slot) const;

 private:
  friend MockAdServer mock_observe(MockAdServer server,
                                   const CategoryCounts& event_counts);

  struct Pending {
    std::size_t release_visit;
    CategoryCounts counts;
  };

  MockAdServerOptions options_;
  std::vector<std::string> representatives_;
  CategoryCounts estimate_;
  CategoryCounts released_;
  std::vector<Pending> pending_;
  std::size_t visits_ = 0;
};

// Advances the server by one visit: queues `event_counts` for release
// `lag` visits later and folds everything now due into the estimate.
// Throws DimensionError on a length mismatch.
MockAdServer mock_observe(MockAdServer server,
                          const CategoryCounts& event_counts);

// Tokens of the ads served at the current visit.
std::vector<std::string> mock_serve(const MockAdServer& server,
                                    std::mt19937_64& rng);

// Unbiased draw in [0, bound) using rejection on the raw 64-bit output.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Ad config recognizing the mock server's requests.
const AdParamConfig& mock_ad_config();

// ---------------------------------------------------------------------------
// Replay
// ---------------------------------------------------------------------------

using PageFetcher = std::function<FetchResult(const std::string& url)>;

struct ReplayOptions {
  SeriesOptions series;
  double threshold = 0.3;
  bool real_time = false;  // sleep for each dwell instead of simulating it
  FetchOptions fetch;
  PageFetcher fetcher;     // defaults to fetch_page(url, fetch)
};

struct ReplayResult {
  std::vector<BrowsingEvent> events;
  DistanceSeries series;
  ConvergenceReport report;
  std::vector<CategoryCounts> estimates;          // after each observed visit
  std::vector<std::vector<std::string>> served;   // tokens per observed visit
  std::vector<std::string> warnings;
};

// Replays `script` step by step: build the event, let the server observe
// its counts, record served ads as third-party requests on the event, then
// measure the distance between the user and ad profiles. Deterministic for
// a fixed seed and snapshot pages. Unreachable fetched pages are skipped
// with a warning; a missing snapshot throws InputError.
ReplayResult replay(const SessionScript& script, const MockAdServer& server,
                    const Taxonomy& tax,
                    const RakeConfig& rake = default_rake_config(),
                    const ReplayOptions& options = {});

}  // namespace footprint

#endif  // FOOTPRINT_SIMULATOR_H_
