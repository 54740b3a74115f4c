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

#include "footprint/profile.h"

#include <nlohmann/json.hpp>

#include "footprint/errors.h"

namespace footprint {

Profile profile_from_counts(const CategoryCounts& counts) {
  Profile profile;
  profile.pmf.assign(counts.size(), 0.0);
  std::int64_t total = 0;
  for (std::int64_t c : counts.counts) {
    if (c < 0) throw ParameterError("category counts must be non-negative");
    total += c;
  }
  profile.support_count = total;
  if (total == 0) return profile;
  const auto denom = static_cast<double>(total);
  for (std::size_t l = 0; l < counts.size(); ++l) {
    profile.pmf[l] = static_cast<double>(counts.counts[l]) / denom;
  }
  return profile;
}

CategoryCounts accumulate(const CategoryCounts& counts, const CategoryCounts& event_counts) {
  if (counts.size() != event_counts.size()) {
    throw DimensionError("cannot accumulate counts of length " +
                         std::to_string(event_counts.size()) + " into length " +
                         std::to_string(counts.size()));
  }
  CategoryCounts sum = counts;
  for (std::size_t l = 0; l < sum.size(); ++l) sum.counts[l] += event_counts.counts[l];
  return sum;
}

Classification event_classification(const BrowsingEvent& event, const Taxonomy& tax) {
  std::vector<std::string> terms;
  terms.reserve(event.keywords.size());
  for (const Keyword& k : event.keywords) terms.push_back(k.term);
  return classify_all(terms, tax);
}

CategoryCounts user_counts_at(const EventStore& store, std::string_view identity_id,
                              Timestamp t, const Taxonomy& tax) {
  CategoryCounts total(tax.size());
  for (const BrowsingEvent& e : store.events_until(identity_id, t)) {
    total = accumulate(total, event_classification(e, tax).counts);
  }
  return total;
}

Profile user_profile_at(const EventStore& store, std::string_view identity_id, Timestamp t,
                        const Taxonomy& tax) {
  return profile_from_counts(user_counts_at(store, identity_id, t, tax));
}

std::string profile_to_json(const Profile& profile, const Taxonomy& tax) {
  if (profile.size() != tax.size()) {
    throw DimensionError("profile length does not match the taxonomy");
  }
  nlohmann::ordered_json j;
  j["categories"] = tax.categories();
  j["pmf"] = profile.pmf;
  j["support_count"] = profile.support_count;
  return j.dump(2);
}

}  // namespace footprint
