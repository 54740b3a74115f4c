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

#include "footprint/ad_extractor.h"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "footprint/data.h"
#include "footprint/errors.h"
#include "footprint/text.h"
#include "footprint/url.h"

namespace footprint {
namespace {

std::vector<std::string> string_array(const nlohmann::json& j, const char* name) {
  if (!j.contains(name) || !j.at(name).is_array()) {
    throw FormatError(std::string("ad config: '") + name + "' must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& v : j.at(name)) {
    if (!v.is_string()) {
      throw FormatError(std::string("ad config: '") + name + "' must be an array of strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

AdParamConfig AdParamConfig::parse_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& err) {
    throw FormatError(std::string("ad config: invalid JSON: ") + err.what());
  }
  if (!j.is_object()) throw FormatError("ad config: expected a JSON object");

  AdParamConfig cfg;
  for (std::string& host : string_array(j, "network_hosts")) {
    std::string h = text::to_lower(text::trim(host));
    while (!h.empty() && h.front() == '.') h.erase(h.begin());
    if (!h.empty()) cfg.network_hosts.push_back(std::move(h));
  }
  if (cfg.network_hosts.empty()) throw FormatError("ad config: network_hosts is empty");
  cfg.topical_params = string_array(j, "topical_params");
  if (!j.contains("token_delimiters") || !j.at("token_delimiters").is_string()) {
    throw FormatError("ad config: 'token_delimiters' must be a string");
  }
  for (char c : j.at("token_delimiters").get<std::string>()) cfg.token_delimiters.insert(c);
  return cfg;
}

AdParamConfig AdParamConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open ad config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

const AdParamConfig& AdParamConfig::example() {
  static const AdParamConfig cfg = parse_json(data::example_ad_config());
  return cfg;
}

bool AdParamConfig::matches_host(std::string_view raw_host) const {
  std::string host = text::to_lower(raw_host);
  while (!host.empty() && host.back() == '.') host.pop_back();
  for (const std::string& suffix : network_hosts) {
    if (host == suffix) return true;
    if (host.size() > suffix.size() && host.ends_with(suffix) &&
        host[host.size() - suffix.size() - 1] == '.') {
      return true;
    }
  }
  return false;
}

std::vector<RequestRecord> third_party_requests(const BrowsingEvent& event,
                                                const PublicSuffixList& psl) {
  const std::string page_domain = registrable_domain_of_url(event.url, psl);
  std::vector<RequestRecord> out;
  for (const RequestRecord& r : event.requests) {
    const std::string domain = registrable_domain_of_url(r.url, psl);
    if (!domain.empty() && domain != page_domain) out.push_back(r);
  }
  return out;
}

std::optional<AdObservation> extract_ad_tokens(const RequestRecord& req,
                                               const AdParamConfig& cfg) {
  const auto url = Url::parse_absolute(req.url);
  if (!url || !cfg.matches_host(url->host) || !url->query) return std::nullopt;
  const auto params = parse_query(*url->query);
  if (!params) return std::nullopt;

  AdObservation obs;
  obs.source_url = req.url;
  for (const std::string& wanted : cfg.topical_params) {
    for (const auto& [key, value] : *params) {
      if (key != wanted) continue;
      std::string token;
      auto flush = [&] {
        std::string t = text::to_lower(text::trim(token));
        if (!t.empty()) obs.tokens.push_back(std::move(t));
        token.clear();
      };
      for (char c : value) {
        if (cfg.token_delimiters.contains(c)) {
          flush();
        } else {
          token.push_back(c);
        }
      }
      flush();
    }
  }
  if (obs.tokens.empty()) return std::nullopt;
  return obs;
}

std::vector<AdObservation> ad_observations(const std::vector<BrowsingEvent>& events,
                                           const AdParamConfig& cfg,
                                           const PublicSuffixList& psl) {
  std::vector<AdObservation> out;
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (const RequestRecord& r : third_party_requests(events[i], psl)) {
      if (auto obs = extract_ad_tokens(r, cfg)) {
        obs->event_index = i;
        out.push_back(std::move(*obs));
      }
    }
  }
  return out;
}

AdProfileResult ad_profile_details_at(const EventStore& store, std::string_view identity_id,
                                      Timestamp t, const Taxonomy& tax,
                                      const AdParamConfig& cfg, const PublicSuffixList& psl) {
  const auto observations = ad_observations(store.events_until(identity_id, t), cfg, psl);
  std::vector<std::string> tokens;
  for (const AdObservation& obs : observations) {
    tokens.insert(tokens.end(), obs.tokens.begin(), obs.tokens.end());
  }
  Classification classified = classify_all(tokens, tax);
  AdProfileResult result;
  result.profile = profile_from_counts(classified.counts);
  result.observations = observations.size();
  result.dropped_tokens = classified.dropped;
  result.unclassified = std::move(classified.unclassified);
  return result;
}

Profile ad_profile_at(const EventStore& store, std::string_view identity_id, Timestamp t,
                      const Taxonomy& tax, const AdParamConfig& cfg,
                      const PublicSuffixList& psl) {
  return ad_profile_details_at(store, identity_id, t, tax, cfg, psl).profile;
}

}  // namespace footprint
