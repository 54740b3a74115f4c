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

#ifndef FOOTPRINT_SERIES_IO_H_
#define FOOTPRINT_SERIES_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "footprint/metrics.h"

namespace footprint {

inline constexpr std::string_view kSeriesCsvHeader =
    "visit,timestamp,value,user_support,ad_support";

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

std::string series_to_csv(const DistanceSeries& series);
std::string series_to_json(const DistanceSeries& series);

// Parses the CSV produced by series_to_csv. Throws FormatError.
DistanceSeries series_from_csv(std::string_view csv, Metric metric);

struct ConvergenceReport {
  Metric metric = Metric::kL1;
  double threshold = 0.0;
  std::optional<std::size_t> visits_to_threshold;
  std::optional<double> final_value;
  std::vector<SkippedPoint> skipped;
  std::vector<std::string> warnings;
};

ConvergenceReport make_report(const DistanceSeries& series, double threshold,
                              std::vector<std::string> warnings = {});

// {"metric", "threshold", "visits_to_threshold", "final_value", "skipped",
//  "warnings"}; unreached threshold and empty series serialize as null.
std::string report_to_json(const ConvergenceReport& report);

// Standalone SVG line chart of the series values against visit index.
std::string series_to_svg(const DistanceSeries& series,
                          std::optional<double> threshold = std::nullopt);

}  // namespace footprint

#endif  // FOOTPRINT_SERIES_IO_H_
