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

#include "footprint/series_io.h"

#include <charconv>
#include <nlohmann/json.hpp>
#include <sstream>

#include "footprint/errors.h"
#include "footprint/text.h"

namespace footprint {
namespace {

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw FormatError("series CSV line " + std::to_string(line_no) + ": bad number '" +
                      std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string series_to_csv(const DistanceSeries& series) {
  std::string out(kSeriesCsvHeader);
  out.push_back('\n');
  for (const DistancePoint& p : series.points) {
    out += std::to_string(p.visit_index) + "," + p.timestamp.iso8601() + "," +
           format_double(p.value) + "," + std::to_string(p.user_support) + "," +
           std::to_string(p.ad_support) + "\n";
  }
  return out;
}

std::string series_to_json(const DistanceSeries& series) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const DistancePoint& p : series.points) {
    nlohmann::ordered_json j;
    j["visit"] = p.visit_index;
    j["timestamp"] = p.timestamp.iso8601();
    j["value"] = p.value;
    j["user_support"] = p.user_support;
    j["ad_support"] = p.ad_support;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

DistanceSeries series_from_csv(std::string_view csv, Metric metric) {
  DistanceSeries series;
  series.metric = metric;
  std::size_t line_no = 0;
  for (std::string_view line : text::split(csv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kSeriesCsvHeader) {
        throw FormatError("series CSV must start with the header '" +
                          std::string(kSeriesCsvHeader) + "'");
      }
      continue;
    }
    if (line.empty()) continue;
    const auto fields = text::split(line, ',');
    if (fields.size() != 5) {
      throw FormatError("series CSV line " + std::to_string(line_no) + ": expected 5 fields");
    }
    DistancePoint p;
    p.visit_index = parse_number<std::size_t>(fields[0], line_no);
    try {
      p.timestamp = Timestamp::parse_iso8601(fields[1]);
    } catch (const InputError& err) {
      throw FormatError("series CSV line " + std::to_string(line_no) + ": " + err.what());
    }
    p.value = parse_number<double>(fields[2], line_no);
    p.user_support = parse_number<std::int64_t>(fields[3], line_no);
    p.ad_support = parse_number<std::int64_t>(fields[4], line_no);
    if (!series.points.empty() && p.visit_index <= series.points.back().visit_index) {
      throw FormatError("series CSV line " + std::to_string(line_no) +
                        ": visit indices must increase");
    }
    series.points.push_back(p);
  }
  if (line_no == 0) throw FormatError("series CSV is empty");
  return series;
}

ConvergenceReport make_report(const DistanceSeries& series, double threshold,
                              std::vector<std::string> warnings) {
  ConvergenceReport report;
  report.metric = series.metric;
  report.threshold = threshold;
  report.visits_to_threshold = convergence_visits(series, threshold);
  if (!series.points.empty()) report.final_value = series.points.back().value;
  report.skipped = series.skipped;
  report.warnings = std::move(warnings);
  return report;
}

std::string report_to_json(const ConvergenceReport& report) {
  nlohmann::ordered_json j;
  j["metric"] = to_string(report.metric);
  j["threshold"] = report.threshold;
  j["visits_to_threshold"] = report.visits_to_threshold
                                 ? nlohmann::ordered_json(*report.visits_to_threshold)
                                 : nlohmann::ordered_json(nullptr);
  j["final_value"] = report.final_value ? nlohmann::ordered_json(*report.final_value)
                                        : nlohmann::ordered_json(nullptr);
  j["skipped"] = nlohmann::ordered_json::array();
  for (const SkippedPoint& s : report.skipped) {
    j["skipped"].push_back(
        {{"visit", s.visit_index}, {"timestamp", s.timestamp.iso8601()}, {"reason", s.reason}});
  }
  j["warnings"] = report.warnings;
  return j.dump(2);
}

}  // namespace footprint
