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

#include "footprint/simulator.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "footprint/errors.h"
#include "footprint/url.h"

namespace footprint {
namespace {

using nlohmann::json;

[[noreturn]] void script_error(const std::string& what) {
  throw FormatError("session script: " + what);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// SessionScript

void SessionScript::validate() const {
  if (identity.id.empty()) throw InputError("session script: identity id is empty");
  if (steps.empty()) throw InputError("session script: at least one step is required");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const SessionStep& s = steps[i];
    const std::string where = "session script step " + std::to_string(i + 1);
    if (!std::isfinite(s.dwell) || s.dwell < 0.0) throw InputError(where + ": negative dwell");
    if (!is_absolute_url_with_host(s.url)) {
      throw InputError(where + ": url is not absolute: '" + s.url + "'");
    }
    if (s.source.kind == PageSource::Kind::kSnapshot && s.source.content.empty()) {
      throw InputError(where + ": empty snapshot path");
    }
  }
}

SessionScript SessionScript::parse_json(std::string_view text, std::string base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& err) {
    script_error(std::string("invalid JSON: ") + err.what());
  }
  if (!j.is_object()) script_error("expected an object");

  SessionScript script;
  script.base_dir = std::move(base_dir);
  if (!j.contains("identity") || !j["identity"].is_object() ||
      !j["identity"].contains("id") || !j["identity"]["id"].is_string()) {
    script_error("'identity.id' must be a string");
  }
  script.identity.id = j["identity"]["id"].get<std::string>();
  script.identity.label = j["identity"].value("label", script.identity.id);

  if (j.contains("start")) {
    const json& start = j["start"];
    if (start.is_number_integer()) {
      script.start = Timestamp::from_seconds(start.get<std::int64_t>());
    } else if (start.is_string()) {
      script.start = Timestamp::parse(start.get<std::string>());
    } else {
      script_error("'start' must be an ISO-8601 string or epoch seconds");
    }
  }

  if (!j.contains("steps") || !j["steps"].is_array()) script_error("'steps' must be an array");
  for (std::size_t i = 0; i < j["steps"].size(); ++i) {
    const json& s = j["steps"][i];
    const std::string where = "steps[" + std::to_string(i) + "]";
    if (!s.is_object() || !s.contains("url") || !s["url"].is_string()) {
      script_error(where + ".url must be a string");
    }
    SessionStep step;
    step.url = s["url"].get<std::string>();
    if (s.contains("dwell")) {
      if (!s["dwell"].is_number()) script_error(where + ".dwell must be a number");
      step.dwell = s["dwell"].get<double>();
    }
    const int sources = static_cast<int>(s.contains("html")) +
                        static_cast<int>(s.contains("snapshot")) +
                        static_cast<int>(s.value("fetch", false));
    if (sources != 1) {
      script_error(where + " needs exactly one of \"html\", \"snapshot\" or \"fetch\": true");
    }
    if (s.contains("html")) {
      if (!s["html"].is_string()) script_error(where + ".html must be a string");
      step.source = {PageSource::Kind::kInline, s["html"].get<std::string>()};
    } else if (s.contains("snapshot")) {
      if (!s["snapshot"].is_string()) script_error(where + ".snapshot must be a string");
      step.source = {PageSource::Kind::kSnapshot, s["snapshot"].get<std::string>()};
    } else {
      step.source = {PageSource::Kind::kFetched, ""};
    }
    script.steps.push_back(std::move(step));
  }
  script.validate();
  return script;
}

SessionScript SessionScript::load(const std::string& path) {
  const std::filesystem::path p(path);
  std::string dir = p.parent_path().string();
  return parse_json(read_file(p), dir.empty() ? "." : dir);
}

std::string SessionScript::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = {{"id", identity.id}, {"label", identity.label}};
  j["start"] = start.iso8601();
  j["steps"] = nlohmann::ordered_json::array();
  for (const SessionStep& s : steps) {
    nlohmann::ordered_json step;
    step["url"] = s.url;
    step["dwell"] = s.dwell;
    switch (s.source.kind) {
      case PageSource::Kind::kInline:
        step["html"] = s.source.content;
        break;
      case PageSource::Kind::kSnapshot:
        step["snapshot"] = s.source.content;
        break;
      case PageSource::Kind::kFetched:
        step["fetch"] = true;
        break;
    }
    j["steps"].push_back(std::move(step));
  }
  return j.dump(2);
}

std::vector<Timestamp> step_timestamps(const SessionScript& script) {
  std::vector<Timestamp> out;
  Timestamp t = script.start;
  for (const SessionStep& s : script.steps) {
    out.push_back(t);
    const auto advance = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(s.dwell)));
    t = t.plus_millis(advance * 1000);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MockAdServer

std::string_view to_string(ServeMode mode) {
  return mode == ServeMode::kSampled ? "sampled" : "expected";
}

ServeMode serve_mode_from_string(std::string_view s) {
  if (s == "sampled") return ServeMode::kSampled;
  if (s == "expected") return ServeMode::kExpected;
  throw ParameterError("unknown serve mode '" + std::string(s) +
                       "' (expected sampled or expected)");
}

MockAdServer::MockAdServer(const Taxonomy& tax, MockAdServerOptions options)
    : options_(options), estimate_(tax.size()), released_(tax.size()) {
  if (options_.ads_per_visit == 0) throw InputError("ads_per_visit must be at least 1");
  for (CategoryId c = 0; c < tax.size(); ++c) {
    const auto& rep = tax.representatives()[c];
    if (!rep) {
      throw InputError("category '" + tax.name(c) +
                       "' has no term to serve as its ad token");
    }
    representatives_.push_back(*rep);
  }
}

std::string MockAdServer::ad_url(std::string_view token, std::size_t visit,
                                 std::size_t slot) const {
  return "https://" + std::string(kHost) + "/serve?topics=" + percent_encode_component(token) +
         "&visit=" + std::to_string(visit) + "&slot=" + std::to_string(slot);
}

MockAdServer mock_observe(MockAdServer server, const CategoryCounts& event_counts) {
  if (event_counts.size() != server.estimate_.size()) {
    throw DimensionError("event counts have " + std::to_string(event_counts.size()) +
                         " categories, the ad server tracks " +
                         std::to_string(server.estimate_.size()));
  }
  ++server.visits_;
  server.pending_.push_back({server.visits_ + server.options_.lag, event_counts});
  server.released_ = CategoryCounts(server.estimate_.size());
  std::erase_if(server.pending_, [&](const MockAdServer::Pending& p) {
    if (p.release_visit > server.visits_) return false;
    server.released_ = accumulate(server.released_, p.counts);
    server.estimate_ = accumulate(server.estimate_, p.counts);
    return true;
  });
  return server;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Largest multiple of bound that fits, so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

std::vector<std::string> mock_serve(const MockAdServer& server, std::mt19937_64& rng) {
  const auto& reps = server.representatives();
  const CategoryCounts& estimate = server.estimate();
  const std::int64_t total = estimate.total();
  std::vector<std::string> tokens;

  if (server.options().mode == ServeMode::kExpected) {
    if (total == 0) return reps;
    const CategoryCounts& released = server.released();
    for (CategoryId c = 0; c < reps.size(); ++c) {
      for (std::int64_t k = 0; k < released.counts[c]; ++k) tokens.push_back(reps[c]);
    }
    return tokens;
  }

  for (std::size_t ad = 0; ad < server.options().ads_per_visit; ++ad) {
    if (total == 0) {
      tokens.push_back(reps[uniform_below(rng, reps.size())]);
      continue;
    }
    auto r = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(total)));
    CategoryId c = 0;
    while (r >= estimate.counts[c]) r -= estimate.counts[c++];
    tokens.push_back(reps[c]);
  }
  return tokens;
}

const AdParamConfig& mock_ad_config() {
  static const AdParamConfig cfg = [] {
    AdParamConfig c;
    c.network_hosts = {"adnet.example"};
    c.topical_params = {"topics"};
    c.token_delimiters = {'|'};
    return c;
  }();
  return cfg;
}

// ---------------------------------------------------------------------------
// Replay

ReplayResult replay(const SessionScript& script, const MockAdServer& initial_server,
                    const Taxonomy& tax, const RakeConfig& rake,
                    const ReplayOptions& options) {
  script.validate();
  rake.validate();
  const PublicSuffixList& psl = PublicSuffixList::builtin();
  const PageFetcher fetcher =
      options.fetcher ? options.fetcher
                      : PageFetcher([&](const std::string& url) { return fetch_page(url, options.fetch); });

  ReplayResult result;
  EventStore store;
  MockAdServer server = initial_server;
  std::mt19937_64 rng(server.options().seed);
  const std::vector<Timestamp> timestamps = step_timestamps(script);
  std::vector<Timestamp> visited;
  std::vector<std::size_t> visit_numbers;

  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const SessionStep& step = script.steps[i];
    const std::size_t visit = i + 1;

    HtmlDocument doc{"", step.url};
    std::vector<RequestRecord> requests;
    switch (step.source.kind) {
      case PageSource::Kind::kInline:
        doc.raw = step.source.content;
        requests = discover_requests(doc, psl);
        break;
      case PageSource::Kind::kSnapshot: {
        const auto path = std::filesystem::path(script.base_dir) / step.source.content;
        if (!std::filesystem::is_regular_file(path)) {
          throw InputError("snapshot missing for step " + std::to_string(visit) + ": '" +
                           path.string() + "'");
        }
        doc.raw = read_file(path);
        requests = discover_requests(doc, psl);
        break;
      }
      case PageSource::Kind::kFetched:
        try {
          FetchResult fetched = fetcher(step.url);
          doc = std::move(fetched.document);
          doc.base_url = step.url;
          requests = std::move(fetched.requests);
        } catch (const Error& err) {
          result.warnings.push_back("visit " + std::to_string(visit) + " skipped: " + err.what());
          continue;
        }
        break;
    }

    BrowsingEvent event;
    event.identity = script.identity;
    event.url = step.url;
    event.timestamp = timestamps[i];
    event.dwell = step.dwell;
    if (!doc.raw.empty()) event.keywords = extract_keywords(doc, rake);

    const CategoryCounts counts = event_classification(event, tax).counts;
    server = mock_observe(std::move(server), counts);
    std::vector<std::string> tokens = mock_serve(server, rng);

    const std::string initiator = registrable_domain_of_url(step.url, psl);
    for (std::size_t slot = 0; slot < tokens.size(); ++slot) {
      requests.push_back({server.ad_url(tokens[slot], visit, slot), initiator});
    }
    event.requests = std::move(requests);
    store.append(std::move(event));

    result.estimates.push_back(server.estimate());
    result.served.push_back(std::move(tokens));
    visited.push_back(timestamps[i]);
    visit_numbers.push_back(visit);

    if (options.real_time && step.dwell > 0.0) {
      std::this_thread::sleep_for(std::chrono::duration<double>(step.dwell));
    }
  }

  if (!visited.empty()) {
    result.series = distance_series(store, script.identity.id, visited, tax, mock_ad_config(),
                                    options.series, psl);
    for (auto& p : result.series.points) p.visit_index = visit_numbers[p.visit_index - 1];
    for (auto& s : result.series.skipped) s.visit_index = visit_numbers[s.visit_index - 1];
    result.events = store.events(script.identity.id);
  } else {
    result.series.metric = options.series.metric;
  }
  result.report = make_report(result.series, options.threshold, result.warnings);
  return result;
}

}  // namespace footprint
