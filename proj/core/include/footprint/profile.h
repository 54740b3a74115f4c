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

#ifndef FOOTPRINT_PROFILE_H_
#define FOOTPRINT_PROFILE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "footprint/event_model.h"
#include "footprint/taxonomy.h"
#include "footprint/time.h"

namespace footprint {

// Normalized histogram (PMF) over the taxonomy categories. Used for both
// the user's interest profile and the ad network's inferred profile.
struct Profile {
  std::vector<double> pmf;
  std::int64_t support_count = 0;

  // An empty profile has no support and an all-zero pmf; distances
  // against it are undefined.
  bool empty() const { return support_count == 0; }
  std::size_t size() const { return pmf.size(); }

  bool operator==(const Profile&) const = default;
};

Profile profile_from_counts(const CategoryCounts& counts);

// Element-wise sum. Throws DimensionError on a length mismatch.
CategoryCounts accumulate(const CategoryCounts& counts,
                          const CategoryCounts& event_counts);

// Category counts contributed by one event: every keyword counts once.
Classification event_classification(const BrowsingEvent& event,
                                    const Taxonomy& tax);

CategoryCounts user_counts_at(const EventStore& store,
                              std::string_view identity_id, Timestamp t,
                              const Taxonomy& tax);

// Profile of all keywords from events with timestamp <= t. Throws
// LookupError for an unknown identity.
Profile user_profile_at(const EventStore& store, std::string_view identity_id,
                        Timestamp t, const Taxonomy& tax);

// {"categories": [...], "pmf": [...], "support_count": n}
std::string profile_to_json(const Profile& profile, const Taxonomy& tax);

}  // namespace footprint

#endif  // FOOTPRINT_PROFILE_H_
