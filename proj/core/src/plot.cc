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

#include <algorithm>
#include <cstdio>
#include <string>

#include "footprint/series_io.h"

namespace footprint {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string series_to_svg(const DistanceSeries& series, std::optional<double> threshold) {
  constexpr double kWidth = 640, kHeight = 360;
  constexpr double kLeft = 56, kRight = 16, kTop = 24, kBottom = 40;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double y_max = series.metric == Metric::kL1 ? 2.0 : series.metric == Metric::kL2 ? 1.5 : 0.0;
  for (const DistancePoint& p : series.points) y_max = std::max(y_max, p.value);
  if (threshold) y_max = std::max(y_max, *threshold);
  if (y_max <= 0.0) y_max = 1.0;
  const std::size_t x_max =
      series.points.empty() ? 1 : std::max<std::size_t>(1, series.points.back().visit_index);

  auto x_of = [&](double visit) { return kLeft + plot_w * (visit / static_cast<double>(x_max)); };
  auto y_of = [&](double value) { return kTop + plot_h * (1.0 - value / y_max); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"360\" "
         "viewBox=\"0 0 640 360\">\n";
  svg += "<rect width=\"640\" height=\"360\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(kLeft) + "\" y=\"16\" font-family=\"sans-serif\" font-size=\"12\">" +
         std::string(to_string(series.metric)) + " distance between user and ad profiles</text>\n";
  svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop + plot_h) + "\" x2=\"" +
         fmt(kLeft + plot_w) + "\" y2=\"" + fmt(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
         "\" y2=\"" + fmt(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = y_max * i / 4.0;
    svg += "<text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(y_of(v) + 4) +
           "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" + fmt(v) +
           "</text>\n";
  }
  svg += "<text x=\"" + fmt(kLeft + plot_w / 2) + "\" y=\"" + fmt(kHeight - 8) +
         "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">visit</text>\n";
  if (threshold) {
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(y_of(*threshold)) + "\" x2=\"" +
           fmt(kLeft + plot_w) + "\" y2=\"" + fmt(y_of(*threshold)) +
           "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
  if (!series.points.empty()) {
    svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const DistancePoint& p : series.points) {
      svg += fmt(x_of(static_cast<double>(p.visit_index))) + "," + fmt(y_of(p.value)) + " ";
    }
    svg += "\"/>\n";
    for (const DistancePoint& p : series.points) {
      svg += "<circle cx=\"" + fmt(x_of(static_cast<double>(p.visit_index))) + "\" cy=\"" +
             fmt(y_of(p.value)) + "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace footprint
