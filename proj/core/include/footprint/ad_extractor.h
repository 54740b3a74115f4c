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

#ifndef FOOTPRINT_AD_EXTRACTOR_H_
#define FOOTPRINT_AD_EXTRACTOR_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "footprint/event_model.h"
#include "footprint/profile.h"
#include "footprint/public_suffix.h"
#include "footprint/taxonomy.h"

namespace footprint {

// Which third-party requests belong to the ad network and which query
// parameters carry its topical tokens.
struct AdParamConfig {
  std::vector<std::string> network_hosts;  // registrable-domain suffixes
  std::vector<std::string> topical_params;
  std::set<char> token_delimiters;

  // Throws FormatError on a missing field or empty network_hosts.
  static AdParamConfig parse_json(std::string_view json);
  static AdParamConfig load(const std::string& path);
  // Illustrative config shipped with the library.
  static const AdParamConfig& example();

  bool matches_host(std::string_view host) const;
};

struct AdObservation {
  std::size_t event_index = 0;
  std::vector<std::string> tokens;
  std::string source_url;

  bool operator==(const AdObservation&) const = default;
};

// Requests whose registrable domain differs from the event page's.
std::vector<RequestRecord> third_party_requests(
    const BrowsingEvent& event,
    const PublicSuffixList& psl = PublicSuffixList::builtin());

// nullopt when the host is not an ad-network host, the query is malformed,
// or no tokens remain after splitting.
std::optional<AdObservation> extract_ad_tokens(const RequestRecord& req,
                                               const AdParamConfig& cfg);

// Observations from the third-party requests of `events`, tagged with the
// index of the event they came from.
std::vector<AdObservation> ad_observations(
    const std::vector<BrowsingEvent>& events, const AdParamConfig& cfg,
    const PublicSuffixList& psl = PublicSuffixList::builtin());

struct AdProfileResult {
  Profile profile;
  std::size_t observations = 0;
  std::size_t dropped_tokens = 0;
  std::vector<std::string> unclassified;
};

AdProfileResult ad_profile_details_at(
    const EventStore& store, std::string_view identity_id, Timestamp t,
    const Taxonomy& tax, const AdParamConfig& cfg,
    const PublicSuffixList& psl = PublicSuffixList::builtin());

// Pools every token of every observation up to t. Throws LookupError for
// an unknown identity.
Profile ad_profile_at(const EventStore& store, std::string_view identity_id,
                      Timestamp t, const Taxonomy& tax,
                      const AdParamConfig& cfg,
                      const PublicSuffixList& psl = PublicSuffixList::builtin());

}  // namespace footprint

#endif  // FOOTPRINT_AD_EXTRACTOR_H_
