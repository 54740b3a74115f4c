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

#include "footprint/metrics.h"

#include <algorithm>
#include <cmath>

#include "footprint/errors.h"

namespace footprint {
namespace {

void check_pair(const Profile& p, const Profile& q) {
  if (p.size() != q.size()) {
    throw DimensionError("profiles have different lengths (" + std::to_string(p.size()) +
                         " vs " + std::to_string(q.size()) + ")");
  }
  if (p.empty() || q.empty()) {
    throw UndefinedDistanceError("distance is undefined for an empty profile");
  }
}

}  // namespace

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::kL1:
      return "l1";
    case Metric::kL2:
      return "l2";
    case Metric::kKl:
      return "kl";
  }
  return "l1";
}

Metric metric_from_string(std::string_view s) {
  if (s == "l1") return Metric::kL1;
  if (s == "l2") return Metric::kL2;
  if (s == "kl") return Metric::kKl;
  throw ParameterError("unknown metric '" + std::string(s) + "' (expected l1, l2 or kl)");
}

double l1(const Profile& p, const Profile& q) {
  check_pair(p, q);
  double sum = 0.0;
  for (std::size_t l = 0; l < p.size(); ++l) sum += std::abs(p.pmf[l] - q.pmf[l]);
  // Both inputs are PMFs, so anything above 2 is accumulated rounding.
  return std::min(sum, 2.0);
}

double l2(const Profile& p, const Profile& q) {
  check_pair(p, q);
  double sum = 0.0;
  for (std::size_t l = 0; l < p.size(); ++l) {
    const double d = p.pmf[l] - q.pmf[l];
    sum += d * d;
  }
  return std::min(std::sqrt(sum), std::sqrt(2.0));
}

double kl(const Profile& p, const Profile& q, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ParameterError("KL smoothing epsilon must be a positive finite number");
  }
  check_pair(p, q);
  double normalizer = 0.0;
  for (double v : q.pmf) normalizer += v + epsilon;
  double sum = 0.0;
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (p.pmf[l] <= 0.0) continue;
    const double smoothed = (q.pmf[l] + epsilon) / normalizer;
    sum += p.pmf[l] * std::log2(p.pmf[l] / smoothed);
  }
  return std::max(sum, 0.0);
}

double distance(Metric metric, const Profile& p, const Profile& q, double epsilon) {
  switch (metric) {
    case Metric::kL1:
      return l1(p, q);
    case Metric::kL2:
      return l2(p, q);
    case Metric::kKl:
      return kl(p, q, epsilon);
  }
  return l1(p, q);
}

DistanceSeries distance_series(const EventStore& store, std::string_view identity_id,
                               const std::vector<Timestamp>& timestamps, const Taxonomy& tax,
                               const AdParamConfig& cfg, const SeriesOptions& options,
                               const PublicSuffixList& psl) {
  for (std::size_t i = 1; i < timestamps.size(); ++i) {
    if (!(timestamps[i - 1] < timestamps[i])) {
      throw ParameterError("series timestamps must be strictly increasing");
    }
  }
  if (options.metric == Metric::kKl && !(options.epsilon > 0.0)) {
    throw ParameterError("KL smoothing epsilon must be a positive finite number");
  }
  if (!store.contains(identity_id)) {
    throw LookupError("unknown identity '" + std::string(identity_id) + "'");
  }

  DistanceSeries series;
  series.metric = options.metric;
  for (std::size_t i = 0; i < timestamps.size(); ++i) {
    const Timestamp t = timestamps[i];
    const Profile user = user_profile_at(store, identity_id, t, tax);
    const Profile ad = ad_profile_at(store, identity_id, t, tax, cfg, psl);
    const std::size_t visit = i + 1;
    if (user.empty() || ad.empty()) {
      std::string reason = user.empty() && ad.empty() ? "user and ad profiles empty"
                           : user.empty()             ? "user profile empty"
                                                      : "ad profile empty";
      series.skipped.push_back({visit, t, std::move(reason)});
      continue;
    }
    series.points.push_back({visit, t, distance(options.metric, user, ad, options.epsilon),
                             user.support_count, ad.support_count});
  }
  return series;
}

std::optional<std::size_t> convergence_visits(const DistanceSeries& series, double threshold) {
  if (!(threshold > 0.0)) throw ParameterError("convergence threshold must be positive");
  for (const DistancePoint& p : series.points) {
    if (p.value < threshold) return p.visit_index;
  }
  return std::nullopt;
}

}  // namespace footprint
