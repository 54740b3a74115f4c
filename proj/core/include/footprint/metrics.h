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

#ifndef FOOTPRINT_METRICS_H_
#define FOOTPRINT_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "footprint/ad_extractor.h"
#include "footprint/event_model.h"
#include "footprint/profile.h"
#include "footprint/taxonomy.h"
#include "footprint/time.h"

namespace footprint {

enum class Metric { kL1, kL2, kKl };

std::string_view to_string(Metric metric);
// Throws ParameterError for anything but "l1", "l2", "kl".
Metric metric_from_string(std::string_view s);

inline constexpr double kDefaultKlEpsilon = 1e-9;

// Sum of absolute coordinate differences, in [0, 2].
// Throws UndefinedDistanceError if either profile is empty and
// DimensionError if the lengths differ.
double l1(const Profile& p, const Profile& q);

// Euclidean distance, in [0, sqrt(2)]. Same errors as l1.
double l2(const Profile& p, const Profile& q);

// D(p || q~) in bits, where q~ = (q + epsilon) / (1 + L * epsilon).
// Terms with p_l = 0 contribute nothing. Same errors as l1 plus
// ParameterError for epsilon <= 0.
double kl(const Profile& p, const Profile& q, double epsilon = kDefaultKlEpsilon);

double distance(Metric metric, const Profile& p, const Profile& q,
                double epsilon = kDefaultKlEpsilon);

struct DistancePoint {
  std::size_t visit_index = 0;  // 1-based
  Timestamp timestamp;
  double value = 0.0;
  std::int64_t user_support = 0;
  std::int64_t ad_support = 0;

  bool operator==(const DistancePoint&) const = default;
};

struct SkippedPoint {
  std::size_t visit_index = 0;
  Timestamp timestamp;
  std::string reason;

  bool operator==(const SkippedPoint&) const = default;
};

struct DistanceSeries {
  Metric metric = Metric::kL1;
  std::vector<DistancePoint> points;
  std::vector<SkippedPoint> skipped;
};

struct SeriesOptions {
  Metric metric = Metric::kL1;
  double epsilon = kDefaultKlEpsilon;
};

// One point per timestamp at which both profiles are non-empty; other
// timestamps are reported in `skipped`. Throws ParameterError unless
// `timestamps` is strictly increasing.
DistanceSeries distance_series(const EventStore& store,
                               std::string_view identity_id,
                               const std::vector<Timestamp>& timestamps,
                               const Taxonomy& tax, const AdParamConfig& cfg,
                               const SeriesOptions& options = {},
                               const PublicSuffixList& psl = PublicSuffixList::builtin());

// Smallest visit index whose value is strictly below `threshold`. Throws
// ParameterError when threshold <= 0.
std::optional<std::size_t> convergence_visits(const DistanceSeries& series,
                                              double threshold);

}  // namespace footprint

#endif  // FOOTPRINT_METRICS_H_
